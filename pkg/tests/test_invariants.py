import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor.errors import InputError, LimitExceededError, NonIsolatedSingularitiesError
from milnor.hilbert import HilbertData, smooth_series
from milnor.invariants import (
    INFINITY,
    analyze_hypersurface,
    coincidence_threshold,
    defect_invariant,
    global_tjurina,
    log_concavity_threshold,
    minimal_syzygy_degree,
    rigidity_dimension,
    stability_threshold,
)
from milnor.ring import VariableSet, parse_polynomial

from conftest import LEMNISCATE
from test_ring import P

LEM = HilbertData(dims=(1, 3, 6, 7, 6, 3, 3, 3), smooth_dims=tuple(smooth_series(2, 4)), T=6)


def log_concave(seq) -> bool:
    return all(seq[i - 1] * seq[i + 1] <= seq[i] ** 2 for i in range(1, len(seq) - 1))


def test_lemniscate_formulas():
    assert global_tjurina(LEM) == 3
    assert coincidence_threshold(LEM) == 5
    assert stability_threshold(LEM, 3) == 5
    assert minimal_syzygy_degree(5, 4) == 3
    assert defect_invariant(LEM, 5) == 2
    assert log_concavity_threshold(LEM, 5) == 5
    assert rigidity_dimension(LEM, 3, 4) == 3


def test_tripwire_on_unstable_sequence():
    h = HilbertData(dims=(1, 3, 6, 7, 6, 4, 3, 3), smooth_dims=LEM.smooth_dims, T=6)
    assert global_tjurina(h) == 3
    h = HilbertData(dims=(1, 3, 6, 7, 6, 3, 4, 3), smooth_dims=LEM.smooth_dims, T=6)
    with pytest.raises(NonIsolatedSingularitiesError):
        global_tjurina(h)


def test_formula_errors():
    with pytest.raises(ValueError):
        minimal_syzygy_degree(1, 4)
    smooth = HilbertData(dims=LEM.smooth_dims, smooth_dims=LEM.smooth_dims, T=6)
    for fn in (coincidence_threshold, lambda h: defect_invariant(h, 3), lambda h: log_concavity_threshold(h, 3)):
        with pytest.raises(ValueError):
            fn(smooth)
    with pytest.raises(ValueError):
        stability_threshold(smooth, 0)
    with pytest.raises(ValueError):
        rigidity_dimension(HilbertData(dims=(1, 3, 3, 3), smooth_dims=(1, 3, 1, 0), T=2), 3, 3)


def test_named_examples(catalog_reports):
    r = catalog_reports
    assert r["Burkhardt quartic"].tau == 45 and r["Fermat quartic curve"].tau == 0
    assert r["Cardioid"].ct == 4 and r["cubic surface 2A_2"].ct == 2
    assert r["quintic 3-fold, 125 nodes"].st == 10 and r["cubic surface A_1+A_5"].st == 2
    assert (r["Kummer"].mdr, r["Burkhardt quartic"].mdr) == (3, 4)
    assert (r["Kummer"].def_value, r["quintic 3-fold, 125 nodes"].def_value) == (6, 24)
    assert r["Kummer"].dims[6] - r["Kummer"].smooth_dims[6] == 16 - 10
    assert (r["Kummer"].lc, r["cubic surface 3A_2"].lc) == (5, INFINITY)
    assert (r["cubic surface 4A_1"].rigidity_dimension, r["Kummer"].rigidity_dimension) == (0, 3)
    assert r["Burkhardt quartic"].rigidity_dimension == 0


def test_analyze_lemniscate():
    r = analyze_hypersurface(P(LEMNISCATE))
    assert (r.tau, r.ct, r.st, r.mdr, r.def_value, r.lc) == (3, 5, 5, 3, 2, 5)
    assert r.nodal and r.num_singularities == 3
    assert r.rigidity_dimension == 3 and not r.projectively_rigid
    assert r.dims == [1, 3, 6, 7, 6, 3, 3, 3]


def test_analyze_smooth():
    r = analyze_hypersurface(P("x^4+y^4+z^4"))
    assert r.smooth and r.tau == 0 and r.dims == r.smooth_dims
    assert r.ct is None and r.nodal is None
    # plane quartics have 14 - 8 = 6 moduli, plane cubics 1
    assert r.rigidity_dimension == 6
    assert analyze_hypersurface(P("x^3+y^3+z^3")).rigidity_dimension == 1


def test_analyze_errors():
    with pytest.raises(InputError):
        analyze_hypersurface(P("x^2+y"))
    with pytest.raises(InputError):
        analyze_hypersurface(P("0"))
    with pytest.raises(InputError):
        analyze_hypersurface(P("x"))
    with pytest.raises(NonIsolatedSingularitiesError):
        analyze_hypersurface(P("x^2*y^2"))
    with pytest.raises(LimitExceededError):
        analyze_hypersurface(P(LEMNISCATE), degree_cap=5)


def test_catalog_invariants(catalog, catalog_reports):
    for e in catalog:
        r = catalog_reports[e.name]
        assert r.rigidity_dimension is None or r.rigidity_dimension >= 0, e.name
        if r.smooth:
            continue
        a, s = r.dims, r.smooth_dims
        assert all(a[k] == s[k] for k in range(r.ct + 1)), e.name
        assert a[r.ct + 1] != s[r.ct + 1], e.name
        assert all(a[k] == r.tau for k in range(r.st, r.T + 2)), e.name
        assert r.st == 0 or a[r.st - 1] != r.tau, e.name
        assert r.ct == r.mdr + r.d - 2
        assert r.def_value > 0, e.name
        assert log_concave(a[: r.ct + 1]), e.name


def test_lemniscate_extension_breaks_log_concavity(catalog_reports):
    a = catalog_reports["Lemniscate"].dims
    assert log_concave(a[:6]) and not log_concave(a[:7])


@given(st.integers(1, 5), st.integers(2, 8))
def test_smooth_series_is_log_concave(n, d):
    assert log_concave(smooth_series(n, d))


def test_positional_and_named_variables_agree():
    src = "x0^3+x1^3+x2^3+x3^3-(x0+x1+x2+x3)^3"
    a = analyze_hypersurface(parse_polynomial(src, VariableSet.parse("x0,x1,x2,x3")))
    b = analyze_hypersurface(parse_polynomial(src.replace("x0", "a"), VariableSet.parse("a,x1,x2,x3")))
    assert a.dims == b.dims and a.tau == b.tau
