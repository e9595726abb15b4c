import json

from conejac.cli import EXIT_GUARD, EXIT_OK, EXIT_PARSE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


class TestInvariantsCommand:
    def test_circulant_json(self, capsys):
        code, rec, _ = run_json(capsys, "invariants", "C4(1)", "--json")
        assert code == EXIT_OK
        assert rec["input"] == "C4(1)"
        assert rec["tau"] == 4
        assert rec["forest_count"] == 45
        assert rec["jacobian"] == {"torsion": [4], "free_rank": 0}

    def test_cone_flag(self, capsys):
        code, rec, _ = run_json(capsys, "invariants", "C4(1)", "--cone", "--json")
        assert code == EXIT_OK
        assert rec["cone_tau"] == 45
        assert rec["cone_jacobian"] == {"torsion": [3, 15], "free_rank": 0}

    def test_edges_file(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("3 3\n0 1\n1 2\n0 2\n")
        code, rec, _ = run_json(capsys, "invariants", "--edges", str(path), "--json")
        assert code == EXIT_OK
        assert rec["tau"] == 3

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "invariants", "C4(1)")
        assert code == EXIT_OK
        assert "tau: 4" in out
        assert "jacobian: Z_4" in out

    def test_bad_spec_exit_code(self, capsys):
        code, _, err = run(capsys, "invariants", "Cfoo")
        assert code == EXIT_PARSE
        assert "error" in err

    def test_missing_edges_file(self, capsys):
        code, _, err = run(capsys, "invariants", "--edges", "/nonexistent/x.txt")
        assert code == EXIT_PARSE

    def test_no_input(self, capsys):
        code, _, err = run(capsys, "invariants")
        assert code == EXIT_PARSE


class TestFastpathCommand:
    def test_even(self, capsys):
        code, rec, _ = run_json(capsys, "fastpath", "C5(1)", "--json")
        assert code == EXIT_OK
        assert rec["path"] == "even-circulant"
        assert rec["cone_jacobian"] == {"torsion": [11, 11], "free_rank": 0}

    def test_odd_verified(self, capsys):
        code, rec, _ = run_json(capsys, "fastpath", "C6(1,3)", "--verify", "--json")
        assert code == EXIT_OK
        assert rec["path"] == "odd-circulant"
        assert rec["cone_jacobian"] == {"torsion": [4, 4, 4, 28], "free_rank": 0}
        assert rec["verified"] is True

    def test_cobordism_verified(self, capsys):
        code, rec, _ = run_json(capsys, "fastpath", "COB3(1|1)", "--verify", "--json")
        assert code == EXIT_OK
        assert rec["path"] == "cobordism"
        assert rec["cone_jacobian"] == {"torsion": [24, 72], "free_rank": 0}
        assert rec["verified"] is True

    def test_bad_spec(self, capsys):
        code, _, err = run(capsys, "fastpath", "K5")
        assert code == EXIT_PARSE


class TestClosedFormCommand:
    def test_wheel(self, capsys):
        code, rec, _ = run_json(capsys, "closed-form", "wheel", "4", "--json")
        assert code == EXIT_OK
        assert rec["cone_tau"] == 45
        assert rec["cone_jacobian"] == {"torsion": [3, 15], "free_rank": 0}

    def test_mobius_verified(self, capsys):
        code, rec, _ = run_json(
            capsys, "closed-form", "mobius-cone", "3", "--verify", "--json"
        )
        assert code == EXIT_OK
        assert rec["cone_tau"] == 1792
        assert rec["verified"] is True

    def test_prism_verified(self, capsys):
        code, rec, _ = run_json(
            capsys, "closed-form", "prism-cone", "3", "--verify", "--json"
        )
        assert code == EXIT_OK
        assert rec["cone_tau"] == 1728
        assert rec["verified"] is True

    def test_out_of_range_n(self, capsys):
        code, _, err = run(capsys, "closed-form", "wheel", "2")
        assert code == EXIT_PARSE


class TestOracleCommand:
    def test_verified_triangle(self, capsys):
        code, rec, _ = run_json(capsys, "oracle", "C3(1)", "--json")
        assert code == EXIT_OK
        assert rec["tau"] == 3
        assert rec["forest_count"] == 16
        assert rec["verified"] is True

    def test_guard_exit_code(self, capsys):
        code, _, err = run(capsys, "oracle", "C20(1)")
        assert code == EXIT_GUARD
        assert "error" in err

    def test_edges_file(self, capsys, tmp_path):
        path = tmp_path / "p2.txt"
        path.write_text("2 1\n0 1\n")
        code, rec, _ = run_json(capsys, "oracle", "--edges", str(path), "--json")
        assert code == EXIT_OK
        assert rec["forest_count"] == 3
