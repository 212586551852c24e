"""End-to-end command-line tests driving main() directly."""

import json

import pytest

from gesselgamma.cli import main
from gesselgamma.harness import CHECKS, CheckDef


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--multiset", "2,2")
        assert code == 0
        data = json.loads(out)
        assert data["multiset"] == [2, 2]
        assert data["count"] == 3
        assert [row["word"] for row in data["words"]] == [
            [1, 1, 2, 2], [1, 2, 2, 1], [2, 2, 1, 1],
        ]

    def test_json_stats(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--multiset", "2", "--stats")
        assert code == 0
        (row,) = json.loads(out)["words"]
        assert row == {
            "word": [1, 1], "asc": 1, "des": 1, "plat": 1,
            "plat_by_j": {"2": 1}, "dfall": 0, "aplat": 1, "dplat": 0,
        }

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--multiset", "2,2", "--format", "csv",
                           "--stats")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "word,asc,des,plat,dfall,aplat,dplat"
        assert lines[1] == "1 1 2 2,2,1,2,0,2,0"
        assert len(lines) == 4

    def test_bad_multiset(self, capsys):
        code, _, err = run(capsys, "enumerate", "--multiset", "2,zero")
        assert code == 2
        assert err.startswith("error:")


class TestTreePerm:
    def test_roundtrip(self, capsys):
        code, out, _ = run(capsys, "tree", "--perm", "1221")
        assert code == 0
        tree = out.strip()
        assert tree == "(1 * (2 * * *) *)"
        code, out, _ = run(capsys, "perm", "--tree", tree)
        assert code == 0
        assert out.strip() == "1 2 2 1"

    def test_word_forms_agree(self, capsys):
        for form in ("1 2 2 1", "1,2,2,1", "1221"):
            _, out, _ = run(capsys, "tree", "--perm", form)
            assert out.strip() == "(1 * (2 * * *) *)"

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "tree", "--perm", "1 2 1 2")
        assert code == 2
        assert "error:" in err

    def test_bad_tree(self, capsys):
        code, _, err = run(capsys, "perm", "--tree", "(1 * (2 * *)")
        assert code == 2
        assert "error:" in err


class TestPoly:
    def test_routes_agree(self, capsys):
        _, out_enum, _ = run(capsys, "poly", "--multiset", "2,1,2", "--via", "enum")
        _, out_grammar, _ = run(capsys, "poly", "--multiset", "2,1,2", "--via", "grammar")
        assert json.loads(out_enum) == json.loads(out_grammar)

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "poly", "--multiset", "2,2", "--via", "enum",
                           "--format", "csv")
        assert code == 0
        assert out == "x,y,z,coeff\n1,2,2,1\n2,1,2,1\n2,2,1,1\n"


class TestGamma:
    def test_all_routes_agree_on_doubled(self, capsys):
        outputs = []
        for via in ("extract", "grammar", "trees", "perms", "mma", "ternary"):
            code, out, _ = run(capsys, "gamma", "--multiset", "2,2", "--via", via)
            assert code == 0
            outputs.append(json.loads(out))
        assert all(o == outputs[0] for o in outputs)
        assert outputs[0] == {
            "K": 4,
            "entries": [{"i": 1, "j": 2, "g": 1}, {"i": 2, "j": 1, "g": 1}],
        }

    def test_doubled_only_routes_reject_mixed(self, capsys):
        for via in ("mma", "ternary"):
            code, _, err = run(capsys, "gamma", "--multiset", "2,1", "--via", via)
            assert code == 2
            assert "doubled" in err

    def test_grammar_route_on_mixed(self, capsys):
        code, out, _ = run(capsys, "gamma", "--multiset", "2,1,2", "--via", "grammar")
        assert code == 0
        assert json.loads(out) == {
            "K": 5,
            "entries": [
                {"i": 1, "j": 2, "g": 3},
                {"i": 2, "j": 1, "g": 1},
                {"i": 2, "j": 2, "g": 2},
            ],
        }


class TestOrbit:
    def test_canonical_and_members(self, capsys):
        code, out, _ = run(capsys, "orbit", "--perm", "1122")
        assert code == 0
        data = json.loads(out)
        assert data["size"] == 2
        assert data["canonical"] == "(1 * * (2 * * *))"
        assert data["members"] == [
            {"tree": "(1 (2 * * *) * *)", "perm": "2 2 1 1"},
            {"tree": "(1 * * (2 * * *))", "perm": "1 1 2 2"},
        ]

    def test_singleton(self, capsys):
        _, out, _ = run(capsys, "orbit", "--perm", "1221")
        data = json.loads(out)
        assert data["size"] == 1
        assert data["canonical"] == "(1 * (2 * * *) *)"


class TestPrune:
    def test_canonical_tree_has_weight(self, capsys):
        code, out, _ = run(capsys, "prune", "--tree", "(1 * * (2 * * *))")
        assert code == 0
        assert json.loads(out) == {
            "pruned": "(1:v * (2:u *))", "zleaf": 2, "weight": {"u": 1, "v": 1},
        }

    def test_non_canonical_tree_reports_y_vertices(self, capsys):
        code, out, _ = run(capsys, "prune", "--tree", "(1 (2 * * *) * *)")
        assert code == 0
        data = json.loads(out)
        assert data["weight"] is None
        assert data["y_vertices"] == [1]


class TestGrammarDerive:
    def test_xyz_chain_streams_each_step(self, capsys):
        code, out, _ = run(capsys, "grammar-derive", "--rules", "xyz", "--k-seq", "2,2")
        assert code == 0
        docs = [json.loads(line) for line in out.strip().split("\n")]
        assert len(docs) == 2
        _, out_poly, _ = run(capsys, "poly", "--multiset", "2,2", "--via", "grammar")
        assert docs[-1] == json.loads(out_poly)

    def test_uvz_chain_prints_seed_first(self, capsys):
        code, out, _ = run(capsys, "grammar-derive", "--rules", "uvz", "--k-seq", "2,2")
        assert code == 0
        docs = [json.loads(line) for line in out.strip().split("\n")]
        assert len(docs) == 2
        assert docs[0]["terms"] == [{"e": [1, 0, 1], "c": "1"}]
        _, out_gamma, _ = run(capsys, "gamma", "--multiset", "2,2", "--via", "grammar")
        got = {tuple(t["e"]): int(t["c"]) for t in docs[-1]["terms"]}
        expected = {
            (entry["j"], 5 - entry["i"] - 2 * entry["j"], entry["i"]): entry["g"]
            for entry in json.loads(out_gamma)["entries"]
        }
        assert got == expected

    def test_bad_k_seq(self, capsys):
        for bad in ("", "0", "2,x"):
            code, _, err = run(capsys, "grammar-derive", "--rules", "uvz", "--k-seq", bad)
            assert code == 2
            assert "error:" in err


class TestVerify:
    def test_explicit_family_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "ROUNDTRIP",
                           "--multisets", "2,2;1,2")
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert data["family"]["multisets"] == ["1,2", "2,2"]

    def test_bounds_build_the_family(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "P2.1",
                           "--max-n", "2", "--max-k", "2", "--max-K", "4")
        assert code == 0
        data = json.loads(out)
        assert data["family"]["multisets"] == ["1", "1,1", "1,2", "2", "2,1", "2,2"]

    def test_conflicting_family_options(self, capsys):
        code, _, err = run(capsys, "verify", "--check", "P2.1",
                           "--multisets", "2,2", "--max-n", "2")
        assert code == 2
        assert "cannot be combined" in err

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "verify", "--check", "BOGUS", "--multisets", "2")
        assert code == 2
        assert "ROUNDTRIP" in err

    def test_cap_refusal(self, capsys):
        code, _, err = run(capsys, "verify", "--check", "ROUNDTRIP",
                           "--multisets", "3,3,3,3,3,3,3,3,3", "--cap", "1000")
        assert code == 2
        assert err.startswith("refused: family too large")

    def test_failing_check_exits_one(self, capsys):
        CHECKS["X-CLI-FAIL"] = CheckDef(
            "forced failure", lambda m: [{"multiset": m.spec(), "detail": "forced"}])
        try:
            code, out, _ = run(capsys, "verify", "--check", "X-CLI-FAIL",
                               "--multisets", "2")
        finally:
            del CHECKS["X-CLI-FAIL"]
        assert code == 1
        assert json.loads(out)["passed"] is False


class TestGolden:
    def test_exit_zero_and_report(self, capsys):
        code, out, _ = run(capsys, "golden")
        assert code == 0
        assert json.loads(out)["passed"] is True


class TestUsage:
    def test_no_arguments(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2
