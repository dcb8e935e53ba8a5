import io
import json
from pathlib import Path

import pytest

from detfold.cli import main
from detfold.errors import InputError
from detfold.examples import build_example
from detfold.repfile import parse_rep_file, write_rep_file


def run_cli(*args):
    buf = io.StringIO()
    rc = main(list(args), out=buf)
    return rc, buf.getvalue()


class TestRepFile:
    def test_round_trip_all_examples(self):
        for name in ("ex42i", "ex42ii", "prop44", "rmk31", "ex43_quartic_two_lines", "ex43_fermat"):
            ex = build_example(name)
            text = write_rep_file(ex.rep)
            rep2 = parse_rep_file(text)
            assert all(
                rep2.entry(i, j) == ex.rep.entry(i, j) for i in range(4) for j in range(4)
            ), name
            assert write_rep_file(rep2) == text

    def test_comments_and_whitespace(self):
        text = """
# a comment
field rational
vars x1 x2 x3
row 0:  x1 , 0, 0, 0   # trailing comment
row 2: 0, 0, x3, 0
row 1: 0, x2, 0, 0
row 3: 0, 0, 0, x1^3 + x2^3 + 7*x3^3
"""
        rep = parse_rep_file(text)
        assert str(rep.entry(3, 3)) == "x1^3 + x2^3 + 7*x3^3"

    def test_error_reports_line(self):
        with pytest.raises(InputError, match="line 3"):
            parse_rep_file("field rational\nvars x1 x2 x3\nrow 0: x1, 0, 0\n")

    def test_unknown_directive(self):
        with pytest.raises(InputError, match="unrecognized"):
            parse_rep_file("field rational\nvars x1 x2 x3\nfrob 1\n")

    def test_missing_rows(self):
        with pytest.raises(InputError, match="missing rows"):
            parse_rep_file("field rational\nvars x1 x2 x3\nrow 0: x1, 0, 0, 0\n")

    def test_finite_field_file(self):
        text = "field fp 13\nvars x1 x2 x3\n" + "\n".join(
            f"row {i}: " + ", ".join("x1" if i == j else "0" for j in range(4))
            for i in range(3)
        ) + "\nrow 3: 0, 0, 0, x1^3 + 5*x2^3 + x3^3\n"
        rep = parse_rep_file(text)
        assert rep.field.q == 13


class TestCli:
    def test_analyze_round_trip_byte_identical(self, tmp_path):
        rc, _ = run_cli("example", "ex42ii", "--emit", str(tmp_path / "a.rep"))
        assert rc == 0
        rc1, out1 = run_cli("analyze", str(tmp_path / "a.rep"))
        rc2, out2 = run_cli("analyze", str(tmp_path / "a.rep"))
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_analyze_json(self, tmp_path):
        run_cli("example", "prop44", "--emit", str(tmp_path / "p.rep"))
        rc, out = run_cli("analyze", str(tmp_path / "p.rep"), "--json", "--field", "fp:13")
        assert rc == 0
        data = json.loads(out)
        assert data["smooth"] is True
        assert data["s_theta_count"] == 12
        assert data["ns2_rank_lower_bound"] == 14

    def test_oracle_command(self, tmp_path):
        run_cli("example", "ex42ii", "--emit", str(tmp_path / "a.rep"))
        rc, out = run_cli("oracle", str(tmp_path / "a.rep"), "--prime", "7")
        assert rc == 0
        assert "oracle_matches_assembly = true" in out
        assert "oracle_count = 3" in out

    def test_example_command_checks(self):
        rc, out = run_cli("example", "ex42ii")
        assert rc == 0
        assert "all_expected_reproduced = true" in out

    def test_spin_command(self):
        rc, out = run_cli("spin", "--config", "lines=6", "--k", "10")
        assert rc == 0
        assert "is_even_residual_witness = true" in out
        assert "b1 = 10" in out

    def test_lattice_command(self):
        rc, out = run_cli("lattice", "--couples", "12")
        assert rc == 0
        assert "class_count = 25" in out
        assert "ns2_rank_lower_bound = 14" in out

    def test_rejection_exit_code(self, tmp_path):
        bad = tmp_path / "bad.rep"
        bad.write_text(
            "field rational\nvars x1 x2 x3\n"
            "row 0: 0, x1, x2, 0\n"
            "row 1: x1, -x3, 0, 0\n"
            "row 2: x2, 0, -x1, 0\n"
            "row 3: 0, 0, 0, x1^3 + 2*x2^3 + 5*x3^3\n"
        )
        rc, out = run_cli("analyze", str(bad))
        assert rc == 1
        assert "rejected" in out and "node" in out

    def test_asymmetric_exit_code(self, tmp_path):
        bad = tmp_path / "asym.rep"
        bad.write_text(
            "field rational\nvars x1 x2 x3\n"
            "row 0: 0, x1, 0, 0\n"
            "row 1: x2, 0, 0, 0\n"
            "row 2: 0, 0, x3, 0\n"
            "row 3: 0, 0, 0, x1^3\n"
        )
        rc, out = run_cli("analyze", str(bad))
        assert rc == 1
        assert "symmetric" in out

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "syntax.rep"
        bad.write_text("field rational\nvars x1 x2 x3\nrow 0: x1 +, 0, 0, 0\n")
        rc, out = run_cli("analyze", str(bad))
        assert rc == 3

    def test_usage_error(self):
        rc, _ = run_cli("analyze")
        assert rc == 3

    def test_missing_file(self):
        rc, out = run_cli("analyze", "/nonexistent/file.rep")
        assert rc == 3

    def test_oracle_mismatch_exit_code(self, tmp_path, monkeypatch):
        import detfold.cli as cli_mod

        run_cli("example", "ex42ii", "--emit", str(tmp_path / "a.rep"))
        monkeypatch.setattr(cli_mod, "brute_force_oracle", lambda rep, q: [])
        rc, out = run_cli("oracle", str(tmp_path / "a.rep"), "--prime", "7")
        assert rc == 2
        assert "oracle_matches_assembly = false" in out

    def test_emitted_file_reproduces_highlights(self, tmp_path):
        # ex42ii is rational-complete, so the file-based raw analysis must
        # reproduce the fixture's expected counts key for key
        ex = build_example("ex42ii")
        run_cli("example", "ex42ii", "--emit", str(tmp_path / "a.rep"))
        rc, out = run_cli("analyze", str(tmp_path / "a.rep"))
        assert rc == 0
        flat = dict(line.split(" = ", 1) for line in out.splitlines() if " = " in line)
        for key, (want, _src) in ex.expected["rational"].items():
            shown = flat[key]
            if isinstance(want, bool):
                want_s = "true" if want else "false"
            else:
                want_s = str(want)
            assert shown == want_s, key
