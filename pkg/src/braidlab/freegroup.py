"""Free-group words, automorphisms, the kernels K_n, and subgroup membership.

Words of the free group F_r live over letters g1 .. gr (aliases x = g1 and
y = g2); like braid words they are run-length encoded and always freely
reduced.  On top of the word machinery this module provides:

* substitution endomorphisms/automorphisms with verified inverses, among
  them the conjugation actions that the three-strand braid group induces on
  its commutator subgroup (see :mod:`braidlab.exotic`),
* abelianization and 2x2 integer matrices for the induced maps on Z^2,
* the subgroups K_n = ker(F_2 -> Z_{n-1}, y -> 0, x -> 1): membership, the
  Reidemeister-Schreier generator table, the rank-n basis
  [y, x^{n-1}, x y x^{n-2}, ..., x^{n-2} y x], and rewriting of members
  over that basis,
* Stallings subgroup graphs (folded automata) for membership in arbitrary
  finitely generated subgroups.

Text grammar: terms ``x``, ``y`` or ``g<INT>`` with an optional ``^SINT``,
whitespace separated; rank-2 words also admit the compact alphabet
``x/X/y/Y`` (capitals are inverses).
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Sequence

from . import _words
from ._words import WordParseError

__all__ = [
    "FreeWord",
    "parse_free",
    "free_reduce",
    "free_product",
    "free_inverse",
    "abelianize",
    "substitute",
    "GroupAutomorphism",
    "identity_automorphism",
    "apply_automorphism",
    "IntMatrix2",
    "automorphism_abelianization",
    "conj_by_sigma2",
    "conj_by_sigma1",
    "flip_generators",
    "NAMED_AUTOMORPHISMS",
    "kn_member",
    "schreier_table",
    "kn_basis",
    "kn_rewrite",
    "kn_substitute",
    "SubgroupGraph",
    "stallings_graph",
    "subgroup_contains",
]

_ALIAS = {"x": 1, "y": 2}
_COMPACT = {"x": (1, 1), "X": (1, -1), "y": (2, 1), "Y": (2, -1)}


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank.

    ``letters`` holds ``(letter_index, exponent)`` runs with indices in
    ``[1, rank]``; construction normalizes eagerly.
    """

    rank: int = 2
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be at least 1, got {self.rank}")
        normalized = _words.normalize(self.letters)
        for index, _ in normalized:
            if not 1 <= index <= self.rank:
                raise ValueError(f"letter {index} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", normalized)

    @property
    def length(self) -> int:
        return _words.letter_length(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def single_letters(self) -> Iterator[tuple[int, int]]:
        return _words.expand(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_product(self, other)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, _words.invert(self.letters))

    def __pow__(self, k: int) -> "FreeWord":
        return FreeWord(self.rank, _words.power(self.letters, k))

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text form: ``x y^-1`` for rank <= 2, ``g1 g2^-1`` above."""
        names = ("x", "y") if self.rank <= 2 else None
        parts = []
        for index, exponent in self.letters:
            name = names[index - 1] if names else f"g{index}"
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return " ".join(parts)


def parse_free(text: str, rank: int = 2) -> FreeWord:
    """Parse a free-group word (verbose grammar or rank-2 compact form)."""
    squeezed = "".join(text.split())
    if squeezed and set(squeezed) <= set(_COMPACT):
        letters = []
        for offset, char in enumerate(text):
            if char.isspace():
                continue
            index, sign = _COMPACT[char]
            if index > rank:
                raise WordParseError(f"letter {char!r} out of range for rank {rank}", offset)
            letters.append((index, sign))
        return FreeWord(rank, tuple(letters))

    letters = []
    for term, offset in _words.split_terms(text):
        head, exponent = _words.parse_exponent(term, offset)
        if head in _ALIAS:
            index = _ALIAS[head]
        elif head.startswith("g"):
            index = _words.parse_positive_int(head[1:], offset, "letter index")
        else:
            raise WordParseError(f"malformed letter token {term!r}", offset)
        if not 1 <= index <= rank:
            raise WordParseError(f"letter {index} out of range for rank {rank}", offset)
        letters.append((index, exponent))
    return FreeWord(rank, tuple(letters))


def free_reduce(word: FreeWord) -> FreeWord:
    """Identity on :class:`FreeWord` values (construction already reduces)."""
    return FreeWord(word.rank, word.letters)


def free_product(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise ValueError(f"rank mismatch: {u.rank} != {v.rank}")
    return FreeWord(u.rank, _words.concat(u.letters, v.letters))


def free_inverse(u: FreeWord) -> FreeWord:
    return u.inverse()


def abelianize(word: FreeWord) -> tuple[int, ...]:
    """Exponent-sum vector, one entry per letter of the alphabet."""
    sums = [0] * word.rank
    for index, exponent in word.letters:
        sums[index - 1] += exponent
    return tuple(sums)


def substitute(word: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Apply the homomorphism sending letter i to ``images[i-1]``."""
    if len(images) < word.rank:
        raise ValueError(f"need {word.rank} images, got {len(images)}")
    target_rank = images[0].rank if images else word.rank
    runs: list[tuple[int, int]] = []
    for index, exponent in word.letters:
        runs.extend(_words.power(images[index - 1].letters, exponent))
    return FreeWord(target_rank, tuple(runs))


@dataclasses.dataclass(frozen=True)
class GroupAutomorphism:
    """A substitution endomorphism given by the images of the generators.

    When ``inverse_images`` is supplied the constructor verifies that the two
    substitutions compose to the identity on every generator, both ways, so a
    stored inverse is always a genuine inverse.
    """

    images: tuple[FreeWord, ...]
    inverse_images: tuple[FreeWord, ...] | None = None

    def __post_init__(self):
        if not self.images:
            raise ValueError("an automorphism needs at least one generator image")
        rank = len(self.images)
        for image in self.images:
            if image.rank != rank:
                raise ValueError("generator images must live in the same rank")
        if self.inverse_images is not None:
            if len(self.inverse_images) != rank:
                raise ValueError("inverse images must match the rank")
            for i in range(1, rank + 1):
                gen = FreeWord(rank, ((i, 1),))
                if substitute(self.images[i - 1], self.inverse_images) != gen:
                    raise ValueError(f"stored inverse fails on the image of g{i}")
                if substitute(self.inverse_images[i - 1], self.images) != gen:
                    raise ValueError(f"stored inverse fails against g{i}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, word: FreeWord) -> FreeWord:
        return substitute(word, self.images)

    def inverted(self) -> "GroupAutomorphism":
        if self.inverse_images is None:
            raise ValueError("no stored inverse for this automorphism")
        return GroupAutomorphism(self.inverse_images, self.images)

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """The automorphism w -> self(other(w))."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch in composition")
        images = tuple(self(img) for img in other.images)
        inverse = None
        if self.inverse_images is not None and other.inverse_images is not None:
            inv_other = other.inverted()
            inverse = tuple(inv_other(img) for img in self.inverse_images)
        return GroupAutomorphism(images, inverse)


def identity_automorphism(rank: int) -> GroupAutomorphism:
    gens = tuple(FreeWord(rank, ((i, 1),)) for i in range(1, rank + 1))
    return GroupAutomorphism(gens, gens)


def apply_automorphism(auto: GroupAutomorphism, word: FreeWord, power: int = 1) -> FreeWord:
    """Apply ``auto`` (or its verified inverse, for negative powers) |power| times."""
    if word.rank != auto.rank:
        raise ValueError(f"word rank {word.rank} does not match automorphism rank {auto.rank}")
    if power < 0:
        auto = auto.inverted()
        power = -power
    for _ in range(power):
        word = auto(word)
    return word


@dataclasses.dataclass(frozen=True)
class IntMatrix2:
    """A 2x2 matrix of unbounded integers (rows as tuples)."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(((1, 0), (0, 1)))

    def __mul__(self, other: "IntMatrix2") -> "IntMatrix2":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return IntMatrix2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def __pow__(self, k: int) -> "IntMatrix2":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = IntMatrix2.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def determinant(self) -> int:
        (a, b), (c, d) = self.rows
        return a * d - b * c


def automorphism_abelianization(auto: GroupAutomorphism) -> IntMatrix2:
    """Matrix of the induced map on Z^2; columns are the abelianized images."""
    if auto.rank != 2:
        raise ValueError("abelianization matrix is only provided for rank 2")
    col_x = abelianize(auto.images[0])
    col_y = abelianize(auto.images[1])
    return IntMatrix2(((col_x[0], col_y[0]), (col_x[1], col_y[1])))


def _word2(text: str) -> FreeWord:
    return parse_free(text, 2)


def conj_by_sigma2() -> GroupAutomorphism:
    """The automorphism x -> x y^-1 x, y -> x y^-1 x^2 of F_2.

    Under the commutator-subgroup embedding x = σ1 σ2^-1, y = σ1^2 σ2^-2 it
    realizes g -> σ2^-1 g σ2 (verified against the Burau oracle in the test
    suite).
    """
    return GroupAutomorphism(
        (_word2("xYx"), _word2("xYxx")),
        (_word2("Xy"), _word2("XyXXy")),
    )


def flip_generators() -> GroupAutomorphism:
    """The involution x -> x^-1, y -> y^-1 (conjugation by the half twist)."""
    images = (_word2("X"), _word2("Y"))
    return GroupAutomorphism(images, images)


def conj_by_sigma1() -> GroupAutomorphism:
    """g -> σ1^-1 g σ1 on the commutator subgroup: flip . conj_by_sigma2 . flip."""
    flip = flip_generators()
    return flip.compose(conj_by_sigma2()).compose(flip)


NAMED_AUTOMORPHISMS = {
    "sigma2": conj_by_sigma2,
    "sigma1": conj_by_sigma1,
    "flip": flip_generators,
}


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def kn_member(word: FreeWord, n: int) -> bool:
    """Whether a rank-2 word lies in K_n, i.e. its x-exponent sum is 0 mod n-1."""
    _check_n(n)
    if word.rank != 2:
        raise ValueError("K_n membership is defined for rank-2 words")
    return abelianize(word)[0] % (n - 1) == 0


def _x_power(k: int) -> FreeWord:
    return FreeWord(2, ((1, k),)) if k else FreeWord(2)


def schreier_table(n: int) -> dict[tuple[int, int], tuple[FreeWord, int]]:
    """Reidemeister-Schreier table for K_n with transversal 1, x, ..., x^{n-2}.

    Maps ``(i, j)`` with coset index i in 0..n-2 and generator j in 1..4
    (for x, x^-1, y, y^-1) to ``(h, k)`` where x^i g_j = h x^k with h in K_n.
    """
    _check_n(n)
    table: dict[tuple[int, int], tuple[FreeWord, int]] = {}
    y = FreeWord(2, ((2, 1),))
    for i in range(n - 1):
        xi = _x_power(i)
        if i < n - 2:
            table[(i, 1)] = (FreeWord(2), i + 1)
        else:
            table[(i, 1)] = (_x_power(n - 1), 0)
        if i >= 1:
            table[(i, 2)] = (FreeWord(2), i - 1)
        else:
            table[(i, 2)] = (_x_power(-(n - 1)), n - 2)
        conj = xi * y * xi.inverse()
        table[(i, 3)] = (conj, i)
        table[(i, 4)] = (conj.inverse(), i)
    return table


def kn_basis(n: int) -> list[FreeWord]:
    """The rank-n basis [y, x^{n-1}, x y x^{n-2}, ..., x^{n-2} y x] of K_n.

    Obtained from the Schreier generators by dropping inverses and
    right-multiplying each conjugate x^i y x^-i (i >= 1) by x^{n-1}.
    """
    _check_n(n)
    table = schreier_table(n)
    x_power = table[(n - 2, 1)][0]
    basis = [table[(0, 3)][0], x_power]
    for i in range(1, n - 1):
        basis.append(table[(i, 3)][0] * x_power)
    return basis


# Basis coordinates of the Schreier generator for (coset i, generator j);
# entries are (basis_letter, exponent) with letters numbered from 1.
def _schreier_in_basis(i: int, j: int, n: int) -> tuple[tuple[int, int], ...]:
    if j == 1:
        return ((2, 1),) if i == n - 2 else ()
    if j == 2:
        return ((2, -1),) if i == 0 else ()
    if j == 3:
        return ((1, 1),) if i == 0 else ((i + 2, 1), (2, -1))
    if i == 0:
        return ((1, -1),)
    return ((2, 1), (i + 2, -1))


def kn_rewrite(word: FreeWord, n: int) -> FreeWord:
    """Rewrite a member of K_n over the basis alphabet g1 .. gn.

    Scans the word letter by letter, tracking the coset representative and
    emitting the Schreier generator of each step in basis coordinates.
    Substituting the basis words back (:func:`kn_substitute`) recovers the
    input.  Rejects words outside K_n.
    """
    _check_n(n)
    if word.rank != 2:
        raise ValueError("K_n rewriting is defined for rank-2 words")
    if not kn_member(word, n):
        raise ValueError(f"word is not a member of K_{n}")
    runs: list[tuple[int, int]] = []
    state = 0
    for index, sign in word.single_letters():
        j = (1 if sign > 0 else 2) if index == 1 else (3 if sign > 0 else 4)
        runs.extend(_schreier_in_basis(state, j, n))
        if index == 1:
            state = (state + sign) % (n - 1)
    return FreeWord(n, tuple(runs))


def kn_substitute(word: FreeWord, n: int) -> FreeWord:
    """Substitute the K_n basis words for the letters of a rank-n word."""
    _check_n(n)
    if word.rank != n:
        raise ValueError(f"expected a rank-{n} word, got rank {word.rank}")
    return substitute(word, kn_basis(n))


class SubgroupGraph:
    """A folded Stallings graph for a finitely generated subgroup of F_r.

    Vertices are 0 .. num_vertices - 1 with the base point at 0; ``fwd[v]``
    maps a letter to the target of the unique outgoing edge at v with that
    label, ``bwd[v]`` to the source of the unique incoming one.  Vertex
    numbering is the breadth-first order from the base (edges sorted by
    label and direction), so equal subgroups yield identical graphs.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        rank: int,
        num_vertices: int,
        fwd: Sequence[dict[int, int]],
        bwd: Sequence[dict[int, int]],
    ):
        self.rank = rank
        self.num_vertices = num_vertices
        self.base = 0
        self.fwd = tuple(dict(m) for m in fwd)
        self.bwd = tuple(dict(m) for m in bwd)
        self.folded = True

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (source, letter, target), sorted."""
        found = []
        for u, out in enumerate(self.fwd):
            for letter, v in sorted(out.items()):
                found.append((u, letter, v))
        return sorted(found)

    def cycle_rank(self) -> int:
        """First Betti number: edges - vertices + 1 (graphs here are connected)."""
        return len(self.edges()) - self.num_vertices + 1

    def __repr__(self) -> str:
        return (
            f"SubgroupGraph(rank={self.rank}, vertices={self.num_vertices}, "
            f"edges={len(self.edges())})"
        )


def stallings_graph(generators: Sequence[FreeWord]) -> SubgroupGraph:
    """Build the folded core graph of the subgroup the generators produce.

    Starts from one petal per generator wedged at the base vertex, folds
    (merging endpoints whenever a vertex carries two equally labeled edges in
    the same direction) until deterministic, and prunes dangling non-base
    vertices.
    """
    if not generators:
        raise ValueError("at least one generator word is required (it may be trivial)")
    rank = generators[0].rank
    for gen in generators:
        if gen.rank != rank:
            raise ValueError("generators must share a rank")

    edges: list[tuple[int, int, int]] = []
    next_vertex = 1
    for gen in generators:
        letters = list(gen.single_letters())
        prev = 0
        for pos, (letter, sign) in enumerate(letters):
            target = 0 if pos == len(letters) - 1 else next_vertex
            if target != 0:
                next_vertex += 1
            if sign > 0:
                edges.append((prev, letter, target))
            else:
                edges.append((target, letter, prev))
            prev = target

    parent = list(range(next_vertex))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    changed = True
    while changed:
        changed = False
        out_seen: dict[tuple[int, int], int] = {}
        in_seen: dict[tuple[int, int], int] = {}
        for u, letter, v in edges:
            ru, rv = find(u), find(v)
            key = (ru, letter)
            if key in out_seen:
                if union(out_seen[key], rv):
                    changed = True
            else:
                out_seen[key] = rv
            key = (rv, letter)
            if key in in_seen:
                if union(in_seen[key], ru):
                    changed = True
            else:
                in_seen[key] = ru

    folded = {(find(u), letter, find(v)) for u, letter, v in edges}

    # Prune non-base vertices of degree < 2 (possible when a generator is not
    # cyclically reduced); they cannot lie on any reduced closed path.
    while True:
        degree: dict[int, int] = {}
        for u, _, v in folded:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        base_root = find(0)
        dangling = {
            w for w in degree if w != base_root and degree[w] < 2
        }
        if not dangling:
            break
        folded = {e for e in folded if e[0] not in dangling and e[2] not in dangling}

    # Canonical renumbering: breadth-first from the base, moves ordered by
    # (letter, direction).
    adjacency: dict[int, list[tuple[int, int, int]]] = {}
    for u, letter, v in sorted(folded):
        adjacency.setdefault(u, []).append((letter, 0, v))
        adjacency.setdefault(v, []).append((letter, 1, u))
    order: dict[int, int] = {find(0): 0}
    queue = [find(0)]
    while queue:
        current = queue.pop(0)
        for letter, direction, nbr in sorted(adjacency.get(current, [])):
            if nbr not in order:
                order[nbr] = len(order)
                queue.append(nbr)

    count = len(order)
    fwd: list[dict[int, int]] = [dict() for _ in range(count)]
    bwd: list[dict[int, int]] = [dict() for _ in range(count)]
    for u, letter, v in folded:
        nu, nv = order[u], order[v]
        if letter in fwd[nu] or letter in bwd[nv]:
            raise AssertionError("folding left a nondeterministic vertex")
        fwd[nu][letter] = nv
        bwd[nv][letter] = nu
    return SubgroupGraph(rank, count, fwd, bwd)


def subgroup_contains(graph: SubgroupGraph, word: FreeWord) -> bool:
    """Whether the word traces a closed path at the base vertex."""
    if word.rank != graph.rank:
        raise ValueError(f"rank mismatch: word {word.rank}, graph {graph.rank}")
    vertex = graph.base
    for letter, sign in word.single_letters():
        table = graph.fwd[vertex] if sign > 0 else graph.bwd[vertex]
        if letter not in table:
            return False
        vertex = table[letter]
    return vertex == graph.base
