from __future__ import annotations

import json

import pytest

from diagsplit.pipeline import (
    CheckResult,
    VerificationReport,
    emit_report,
    verify_graded,
    verify_theorem,
    within_resource_guard,
)


def test_sl3_p2_passes():
    r = verify_theorem(3, 2)
    assert r.overall == "pass" and len(r.checks) >= 9
    names = [c.name for c in r.checks]
    assert names == sorted(names)
    assert r.get("06-diagonal-order").detail == "order 3, expected 3"


def test_sl2_p3_passes():
    r = verify_theorem(2, 3)
    assert r.overall == "pass"
    assert r.get("08-maximal-z-order").detail == "z-order 2"


def test_negative_controls_are_present_and_reject():
    r = verify_theorem(3, 2, "split")
    for name in ("11-control-naive-product", "12-control-xy"):
        c = r.get(name)
        assert c.status == "pass" and c.witness


def test_naive_section_fails_as_main_section(monkeypatch):
    import diagsplit.diagonal as dg
    import diagsplit.pipeline as pl

    def naive_factors(n, p):
        ring = dg.chart_ring(n, p)
        return [dg.anticanonical_naive(n, p, ring, "x"), dg.anticanonical_naive(n, p, ring, "y")]

    monkeypatch.setattr(pl.dg, "f_factors", naive_factors)
    r = pl.verify_theorem(3, 2, "split")
    assert r.overall == "fail"
    assert r.get("08-maximal-z-order").status == "fail"
    assert r.get("09-maximal-operator[m_max=2]").status == "fail"


def test_check_groups():
    r = verify_theorem(3, 2, "kempf")
    assert {c.name.split("[")[0] for c in r.checks} == {"13-kempf"}
    assert r.data["kempf_count"] == 4
    with pytest.raises(ValueError):
        verify_theorem(3, 2, "bogus")


def test_resource_guard():
    assert within_resource_guard(3, 7) and within_resource_guard(5, 2)
    assert not within_resource_guard(4, 5) and not within_resource_guard(6, 2)
    r = verify_theorem(4, 5)
    assert [c.status for c in r.checks] == ["skipped"]
    assert r.overall == "pass"


def test_principal_guard_skips_are_recorded():
    r = verify_theorem(4, 3, "split")
    skipped = [c for c in r.checks if c.status == "skipped"]
    assert skipped and all(c.name.startswith("10-factor-ideal") for c in skipped)


def test_determinism_without_timings():
    a = verify_theorem(3, 3, timings=False, seed=4, workers=1).to_json()
    b = verify_theorem(3, 3, timings=False, seed=4, workers=4).to_json()
    assert a == b


def test_bad_input():
    with pytest.raises(ValueError):
        verify_theorem(1, 2)
    with pytest.raises(ValueError):
        verify_theorem(3, 9)


def test_graded_report():
    r = verify_graded(4, [2, 3, 5, 7])
    assert r.overall == "pass"
    assert r.data["ranks"]["2,2"] == [1, 3, 0]
    empty = verify_graded(3, [])
    assert empty.checks == [] and empty.overall == "pass"


def test_overall_semantics():
    r = VerificationReport("theorem", 2, 2, [CheckResult("a", "pass"), CheckResult("b", "probabilistic")])
    assert r.overall == "pass"
    r.checks.append(CheckResult("c", "fail", witness="x[2][1]"))
    assert r.overall == "fail"
    with pytest.raises(ValueError):
        CheckResult("d", "maybe")


def test_emit_report(tmp_path, capsys):
    ok = verify_theorem(2, 2)
    path = tmp_path / "r.json"
    assert emit_report(ok, "json", path) == 0
    data = json.loads(path.read_text())
    assert data["overall"] == "pass"
    bad = VerificationReport("theorem", 2, 2, [CheckResult("x", "fail")])
    assert emit_report(bad, "text") == 1
    assert "fail\tx" in capsys.readouterr().out
    prob = VerificationReport("theorem", 2, 2, [CheckResult("y", "probabilistic")])
    emit_report(prob, "json", path)
    assert json.loads(path.read_text())["checks"][0]["status"] == "probabilistic"
    assert emit_report(ok, "json", tmp_path / "new" / "r.json") == 0
    assert emit_report(ok, "json", tmp_path) == 1
    assert "cannot write report" in capsys.readouterr().err


def test_figures(tmp_path):
    from diagsplit.figures import render_figures

    r = verify_theorem(3, 2)
    out = render_figures(r, tmp_path / "rep.json")
    assert {p.name for p in out} == {"rep.checks.png", "rep.factors.png"}
    assert all(p.stat().st_size > 0 for p in out)
    g = render_figures(verify_graded(2, [2, 3]), tmp_path / "g.txt")
    assert {p.name for p in g} == {"g.checks.png", "g.ranks.png"}
