import json

import pytest

from commgraph.analysis import analyze, render, resolve_graph
from commgraph.errors import ClosureExceedsCap, MalformedExpression, UnknownGroupName


def test_gl23():
    r = analyze("GL(2,3)")
    assert r.shape.expression() == "3*K6 + 4*K4 + 6*K2"
    assert r.genus.exact_genus == 3 and r.graph_kind == "commuting"


def test_d18_hypo():
    assert analyze("D18").energies.hypoenergetic


def test_raw_shape():
    r = analyze("K8 + 5*K2", "raw")
    assert (r.zagreb.M1, r.zagreb.M2) == (402, 1377)
    assert r.group is None and r.census is None


def test_nc_of_shape_is_complement():
    r = analyze("3*K6", "nc")
    assert r.zagreb.m == 18 * 17 // 2 - 45
    assert r.graph_kind == "noncommuting"
    assert r.complement_zagreb.M2 == 1125


def test_nc_group():
    r = analyze("(Z3×Z3)⋊Q8", "nc")
    assert r.energies.hyperenergetic and r.zagreb.n == 71


def test_errors():
    with pytest.raises(UnknownGroupName):
        analyze("PSL(2,13)")
    with pytest.raises(MalformedExpression):
        analyze("K3 v")
    with pytest.raises(ClosureExceedsCap):
        resolve_graph("A5", "c", cap=59)
    with pytest.raises(ValueError):
        resolve_graph("A5", "xx")


def test_render_formats_are_deterministic():
    recs = [analyze("D10"), analyze("K4 + F2", "raw")]
    for fmt in ("json", "csv", "md"):
        assert render(recs, fmt) == render([analyze("D10"), analyze("K4 + F2", "raw")], fmt)
    data = json.loads(render(recs, "json"))
    assert data[0]["energies"]["ordering"] and data[1]["spectra"]["A"]
    with pytest.raises(ValueError):
        render(recs, "xml")
