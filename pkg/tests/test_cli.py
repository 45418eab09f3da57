import json

from coxhull.cli import main


def test_check_writes_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = main(["check", "--type", "a2t", "--radius", "3",
                 "--report", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert set(data) == {"type", "radius", "triples_checked", "counterexamples",
                         "max_ratio", "wall_clock_ms"}
    assert data["type"] == "a2t"
    assert data["radius"] == 3
    assert data["counterexamples"] == []
    assert set(data["max_ratio"]) == {"num", "den"}
    out = capsys.readouterr().out
    assert "0 counterexamples" in out


def test_check_deterministic_reports_across_jobs(tmp_path):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["check", "--type", "c2t", "--radius", "3", "--jobs", "1",
                 "--seed", "9", "--report", str(r1)]) == 0
    assert main(["check", "--type", "c2t", "--radius", "3", "--jobs", "3",
                 "--seed", "9", "--report", str(r2)]) == 0
    d1, d2 = json.loads(r1.read_text()), json.loads(r2.read_text())
    d1.pop("wall_clock_ms")
    d2.pop("wall_clock_ms")
    assert d1 == d2


def test_check_radius_cap(capsys):
    assert main(["check", "--type", "a2t", "--radius", "9"]) == 2
    assert "exceeds the cap" in capsys.readouterr().err
    # explicit override allows it (but keep it tiny here by capping lower)
    assert main(["check", "--type", "a2t", "--radius", "2",
                 "--radius-cap", "2"]) == 0


def test_hull_command(capsys):
    assert main(["hull", "--type", "a2t", "--u", "", "--v", "121"]) == 0
    out = capsys.readouterr().out
    assert "d(u,v)=3" in out
    assert "|Conv(u,v)|=6" in out

    assert main(["hull", "--type", "i2inf", "--u", "", "--v", "1212"]) == 0
    out = capsys.readouterr().out
    assert "|Conv(u,v)|=5" in out

    assert main(["hull", "--type", "g2t"]) == 0
    out = capsys.readouterr().out
    assert "|Conv(u,v)|=1 |Conv(v,w)|=1 |Conv(u,w)|=1 |Conv(u,v,w)|=1" in out


def test_hull_bad_word(capsys):
    assert main(["hull", "--type", "a2t", "--u", "4"]) == 2
    assert "digits 1..3" in capsys.readouterr().err
    assert main(["hull", "--type", "i2inf", "--u", "3"]) == 2


def test_hull_svg_output(tmp_path, capsys):
    svg = tmp_path / "hull.svg"
    assert main(["hull", "--type", "a2t", "--u", "", "--v", "121",
                 "--w", "23", "--svg", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg")
    out = capsys.readouterr().out
    assert "filled polygons" in out


def test_formula_a2_verify(capsys):
    assert main(["formula", "--type", "a2t", "--xy", "7,3", "--verify"]) == 0
    out = capsys.readouterr().out
    assert "23" in out and "equal: yes" in out


def test_formula_i2inf(capsys):
    assert main(["formula", "--type", "i2inf", "--d", "5"]) == 0
    assert "6" in capsys.readouterr().out


def test_formula_c2_unverified(capsys):
    assert main(["formula", "--type", "c2t", "--abxy", "2,2,5,4"]) == 0
    out = capsys.readouterr().out
    assert "size_uv=4 size_vw=18 size_uvw=26" in out
    assert "72 >= 26" in out


def test_formula_c2_verify_flags_middle_count(capsys):
    # The enumerated middle hull has one more chamber than the closed form;
    # --verify reports the mismatch and exits nonzero.
    assert main(["formula", "--type", "c2t", "--abxy", "2,2,5,4",
                 "--verify"]) == 1
    out = capsys.readouterr().out
    assert "size_uv=4 (equal: yes)" in out
    assert "size_vw=19 (equal: NO)" in out
    assert "size_uvw=26 (equal: yes)" in out


def test_formula_constraint_errors(capsys):
    assert main(["formula", "--type", "a2t", "--xy", "0,2"]) == 2
    capsys.readouterr()
    assert main(["formula", "--type", "c2t", "--abxy", "3,2,5,4"]) == 2
    capsys.readouterr()
    assert main(["formula", "--type", "a2t"]) == 2


def test_prove_a2(capsys):
    assert main(["prove", "a2", "--box", "10"]) == 0
    out = capsys.readouterr().out
    assert "decomposition identity: ok" in out
    assert "factorization identity: ok" in out
    assert "0 violations" in out
    assert out.strip().endswith("PASS")


def test_prove_c2(capsys):
    assert main(["prove", "c2", "--box", "20"]) == 0
    out = capsys.readouterr().out
    assert "16 terms" in out
    assert "16*k*n*p*q" in out
    assert "term-for-term match with pinned expansion: ok" in out
    assert "all coefficients strictly positive: ok" in out
    assert out.strip().endswith("PASS")
