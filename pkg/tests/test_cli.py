import io
import json

import pytest
from hypothesis import given

from anuclear.catalog import ORDER6_LOOP_ROWS, klein, order6_loop
from anuclear.cli import INCONSISTENT, analysis_report, format_table, parse_table_file, parse_table_text, run_command
from anuclear.errors import ColumnNotPermutation, ParseError

from conftest import quasigroups

LOOP6_TEXT = "# order-6 loop\n6\n" + "\n".join(" ".join(row) for row in ORDER6_LOOP_ROWS) + "\n"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def loop6_file(tmp_path):
    p = tmp_path / "loop6.txt"
    p.write_text(LOOP6_TEXT)
    return str(p)


@pytest.fixture
def klein_file(tmp_path):
    p = tmp_path / "klein.txt"
    p.write_text(format_table(klein()))
    return str(p)


def test_parse_examples():
    z2 = parse_table_text("2\n0 1\n1 0")
    assert z2.table == ((0, 1), (1, 0))
    assert parse_table_file(io.StringIO(LOOP6_TEXT)) == order6_loop()
    with pytest.raises(ColumnNotPermutation) as exc:
        parse_table_text("2\n0 1\n0 1")
    assert exc.value.index == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 0),
        ("x\n", 1),
        ("# c\n2\n0 1\n", 3),
        ("2\n0 1\n1 a\n", 3),
        ("2\n0 1 0\n1 0\n", 2),
        ("2\n0 1\n1 2\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_table_text(text)
    assert exc.value.line == line


@given(quasigroups(max_n=8))
def test_round_trip(q):
    assert parse_table_text(format_table(q)) == q


def test_analyze_loop6(loop6_file):
    code, out, _ = run(["analyze", loop6_file])
    assert code == 0
    assert "N_m = {0, 1}" in out
    assert "1Nm: order 2, orbits 0 1 | 2 4 | 3 5" in out
    assert "2Nm: order 2, orbits 0 1 | 2 3 | 4 5" in out
    assert "5*N = {3, 5} vs N*5 = {4, 5}" in out
    assert INCONSISTENT not in out


def test_analyze_json(loop6_file):
    code, out, _ = run(["analyze", loop6_file, "--json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["garrison_nuclei"]["middle"] == [0, 1]
    comps = rep["a_nuclei"]["middle"]["components"]
    assert comps["1Nm"]["orbits"] == [[0, 1], [2, 4], [3, 5]]
    assert comps["2Nm"]["orbits"] == [[0, 1], [2, 3], [4, 5]]
    assert rep["autotopy"]["order"] == 8
    assert rep["congruence"]["garrison_cosets"]["middle"]["normal"] is False
    assert not rep["inconsistent"]
    assert run(["analyze", loop6_file, "--json"])[1] == out


def test_analyze_max_n(loop6_file):
    code, out, _ = run(["analyze", loop6_file, "--json", "--max-n", "4"])
    rep = json.loads(out)
    assert code == 0 and rep["autotopy"] is None and rep["skipped"]
    assert rep["verdicts"]["a_nuclear"] is None


def test_report_consistency_flags():
    rep = analysis_report(klein())
    assert set(rep["consistency"].values()) == {"ok"}
    assert rep["verdicts"]["a_central"] and rep["verdicts"]["abelian_group_isotope"]


def test_autotopy_command(klein_file):
    code, out, _ = run(["autotopy", klein_file])
    assert code == 0 and "order: 96" in out.splitlines()


def test_validate(tmp_path, loop6_file):
    assert run(["validate", loop6_file])[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1\n0 1\n")
    code, _, err = run(["validate", str(bad)])
    assert code == 1 and "ColumnNotPermutation" in err
    assert run(["validate", str(tmp_path / "missing.txt")])[0] == 1


def test_usage_errors(loop6_file):
    assert run([])[0] == 2
    assert run(["frobnicate", loop6_file])[0] == 2
    assert run(["parastrophe", loop6_file, "--sigma", "99"])[0] == 2
    assert run(["inverse", loop6_file, "--family", "lambda"])[0] == 2


def test_parastrophe_and_isotope(loop6_file):
    code, out, _ = run(["parastrophe", loop6_file, "--sigma", "12"])
    assert code == 0 and parse_table_text(out) == order6_loop().transpose()
    code, out, _ = run(["isotope", loop6_file, "--alpha", "(0 1)(2 4)(3 5)", "--beta", "(0 1)(2 3)(4 5)"])
    assert code == 0 and parse_table_text(out) == order6_loop()
    assert run(["isotope", loop6_file, "--alpha", "0,1"])[0] == 1


def test_nuclei_centers_congruence(loop6_file, klein_file):
    code, out, _ = run(["nuclei", loop6_file])
    assert code == 0 and "N_m = {0, 1}" in out
    code, out, _ = run(["centers", klein_file])
    assert code == 0 and "a_central: True" in out
    code, out, _ = run(["congruence", loop6_file, "--partition", "0 1 | 2 4 | 3 5", "--mode", "normal"])
    assert code == 0 and out.strip() == "normal: False"
    code, out, _ = run(["congruence", klein_file, "--partition", "0 1 | 2 3", "--mode", "all"])
    assert code == 0 and out.count("True") == 7
    assert run(["congruence", klein_file, "--partition", "0 1 | 2"])[0] == 1


def test_inverse_command(tmp_path):
    z5 = tmp_path / "z5.txt"
    z5.write_text("5\n" + "\n".join(" ".join(str((x + y) % 5) for y in range(5)) for x in range(5)) + "\n")
    code, out, _ = run(["inverse", str(z5), "--family", "ci"])
    assert code == 0 and "ci: detected 0,4,3,2,1" in out and "autostrophy_bridge: True" in out
    code, out, _ = run(["inverse", str(z5), "--family", "ci", "--J", "0,4,3,2,1"])
    assert "check_witness: True" in out
    code, out, _ = run(["inverse", str(z5), "--family", "rst", "--J", "0,4,3,2,1", "--s", "1"])
    assert "check_witness: True" in out
    code, out, _ = run(["inverse", str(z5), "--family", "abc", "--perms", "e;e;e"])
    assert code == 0 and "check_witness: False" in out
