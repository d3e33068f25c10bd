"""The command-line interface: outputs, exit codes, JSON contracts."""

from __future__ import annotations

import io
import json

from braidlab.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSign:
    def test_positive(self, capsys):
        code, out, _ = invoke(capsys, "sign", "s1 s2^-1")
        assert code == 0 and out == "positive(1)\n"

    def test_trivial(self, capsys):
        code, out, _ = invoke(capsys, "sign", "")
        assert code == 0 and out == "trivial\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "sign", "--json", "s2^-3")
        assert code == 0
        assert json.loads(out) == {"kind": "negative", "main_index": 2}


class TestCompare:
    def test_equal(self, capsys):
        code, out, _ = invoke(capsys, "compare", "s1", "s1")
        assert code == 0 and out == "equal\n"

    def test_less(self, capsys):
        code, out, _ = invoke(capsys, "compare", "", "s1 s2^-1")
        assert code == 0 and out == "less\n"


class TestReduce:
    def test_plain(self, capsys):
        code, out, _ = invoke(capsys, "reduce", "s1 s2 s1^-1")
        assert code == 0 and out == "s2^-1 s1 s2\n"

    def test_trace_lines_are_json(self, capsys):
        code, out, _ = invoke(capsys, "reduce", "--trace", "s1 s2 s1^-1")
        assert code == 0
        lines = out.strip().split("\n")
        step = json.loads(lines[0])
        assert step["step"] == 1
        assert step["handle"] == {"start": 0, "end": 2, "index": 1, "sign": 1}
        assert step["word"] == "s2^-1 s1 s2"
        assert lines[-1] == "s2^-1 s1 s2"

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BRAIDLAB_BUDGET", "0")
        code, out, err = invoke(capsys, "reduce", "s1 s2 s1^-1")
        assert code == 1
        assert "exceeded" in err


class TestBurau:
    def test_identity_matrix(self, capsys):
        code, out, _ = invoke(capsys, "burau", "")
        assert code == 0
        assert json.loads(out) == {"entries": [[[[0, 1]], []], [[], [[0, 1]]]]}

    def test_wrong_strands_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "burau", "s3")
        assert code == 2


class TestEmbedUnembed:
    def test_embed(self, capsys):
        code, out, _ = invoke(capsys, "embed", "x")
        assert code == 0 and out == "s1 s2^-1\n"

    def test_unembed(self, capsys):
        code, out, _ = invoke(capsys, "unembed", "s1 s2^-1")
        assert code == 0 and out == "x\n"

    def test_unembed_rejects_nonzero_sum(self, capsys):
        code, _, err = invoke(capsys, "unembed", "s1")
        assert code == 1 and "exponent sum" in err

    def test_stdin_batch(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("x\ny\n"))
        code, out, _ = invoke(capsys, "embed", "--stdin")
        assert code == 0
        assert out == "s1 s2^-1\ns1^2 s2^-2\n"


class TestAut:
    def test_sigma2_images(self, capsys):
        code, out, _ = invoke(capsys, "aut", "sigma2", "x")
        assert code == 0 and out == "x y^-1 x\n"

    def test_inverse_power(self, capsys):
        code, out, _ = invoke(capsys, "aut", "sigma2", "x y^-1 x", "--power", "-1")
        assert code == 0 and out == "x\n"


class TestKn:
    def test_basis(self, capsys):
        code, out, _ = invoke(capsys, "kn-basis", "3")
        assert code == 0 and out == "y\nx^2\nx y x\n"

    def test_rewrite(self, capsys):
        code, out, _ = invoke(capsys, "kn-rewrite", "3", "x y x^-1")
        assert code == 0 and out == "g3 g2^-1\n"

    def test_rewrite_rejects_non_member(self, capsys):
        code, _, err = invoke(capsys, "kn-rewrite", "3", "x")
        assert code == 1 and "not a member" in err


class TestExoticCompare:
    def test_default_ctx(self, capsys):
        code, out, _ = invoke(capsys, "exotic-compare", "x", "y")
        assert code == 0 and out == "less\n"

    def test_kn_ctx(self, capsys):
        code, out, _ = invoke(capsys, "exotic-compare", "--ctx", "kn:3", "", "g1")
        assert code == 0 and out == "less\n"

    def test_bad_ctx(self, capsys):
        code, _, err = invoke(capsys, "exotic-compare", "--ctx", "k3", "x", "y")
        assert code == 2


class TestProbeConvexity:
    def test_witness_found(self, capsys):
        code, out, _ = invoke(
            capsys, "probe-convexity", "--ctx", "f2", "--gens", "x", "--radius", "8"
        )
        assert code == 0 and out.startswith("witness:")

    def test_json_witness(self, capsys):
        code, out, _ = invoke(
            capsys,
            "probe-convexity",
            "--json",
            "--gens",
            "y",
            "--radius",
            "8",
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload["witness"]) == {"c_low", "g", "c_high"}

    def test_inconclusive_exit(self, capsys):
        # The trivial subgroup can never produce a witness.
        code, out, _ = invoke(
            capsys, "probe-convexity", "--gens", "", "--radius", "2"
        )
        assert code == 1 and "inconclusive" in out


class TestVerify:
    def test_small_run(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--seed", "1", "--trials", "5")
        assert code == 0
        assert out.endswith("result: pass\n")

    def test_json_valid(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--json", "--seed", "1", "--trials", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True

    def test_byte_identical_runs(self, capsys):
        _, first, _ = invoke(capsys, "verify", "--seed", "2", "--trials", "6")
        _, second, _ = invoke(capsys, "verify", "--seed", "2", "--trials", "6")
        assert first == second


class TestErrors:
    def test_unknown_command(self, capsys):
        code, _, err = invoke(capsys, "frobnicate")
        assert code == 2

    def test_parse_error_offset_in_json(self, capsys):
        code, out, _ = invoke(capsys, "sign", "--json", "s1 s9")
        assert code == 2
        payload = json.loads(out)
        assert payload["error"]["type"] == "usage"
        assert payload["error"]["offset"] == 3

    def test_json_on_every_error_path(self, capsys):
        for argv in (
            ["sign", "--json", "s9"],
            ["unembed", "--json", "s1"],
            ["kn-rewrite", "--json", "3", "x"],
        ):
            _, out, _ = invoke(capsys, *argv)
            json.loads(out)  # must not raise

    def test_missing_word(self, capsys):
        code, _, err = invoke(capsys, "sign")
        assert code == 2
