import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor.groebner import (
    GroebnerBasis,
    buchberger,
    dehomogenize_basis,
    leading_term_generators,
    normal_form,
    s_polynomial,
)
from milnor.hilbert import hilbert_function
from milnor.ring import Polynomial, VariableSet, dehomogenize, jacobian, monomial_divides, parse_polynomial

from conftest import LEMNISCATE
from test_ring import P, coeffs, to_sympy

LEMNISCATE_LI = {(0, 1, 4), (0, 2, 3), (0, 3, 1), (1, 0, 4), (1, 1, 2), (1, 2, 1), (2, 0, 1), (2, 1, 0), (3, 0, 0)}


def assert_groebner_criterion(G: GroebnerBasis):
    gens = G.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert normal_form(s_polynomial(gens[i], gens[j]), G).is_zero()


def assert_reduced(G: GroebnerBasis):
    lms = [g.leading_monomial() for g in G.generators]
    for g in G.generators:
        assert g.leading_coefficient() == 1
        for m in g.terms:
            for k, lm in enumerate(lms):
                if m == g.leading_monomial() and lm == m:
                    continue
                assert not monomial_divides(lm, m)


def test_normal_form_examples():
    assert normal_form(P("x^2"), [P("x")]).is_zero()
    assert normal_form(P("x^2+y"), []) == P("x^2+y")
    f = P(LEMNISCATE)
    G = buchberger(jacobian(f))
    assert G.normal_form(f).is_zero()
    assert not G.normal_form(P("y^4")).is_zero()


def test_s_polynomial_examples():
    f = P("x^2+y^2")
    assert s_polynomial(f, f).is_zero()
    assert s_polynomial(P("x^2"), P("y^2")).is_zero()
    assert s_polynomial(f, P("x*y+z^2")) == P("y^3-x*z^2")


def test_buchberger_examples():
    G = buchberger([P("x^3"), P("y^3"), P("z^3")])
    assert G.generators == [P("z^3"), P("y^3"), P("x^3")]  # ascending leading monomials
    G = buchberger([P("x-y"), P("y-z")])
    assert set(G.generators) == {P("x-z"), P("y-z")}
    assert sorted(G.lt_generators) == [(0, 1, 0), (1, 0, 0)]
    G = buchberger([P("x*y-1"), P("x^2"), P("y")])
    assert G.is_whole_ring() and G.generators == [P("1")]
    assert leading_term_generators(G) == [(0, 0, 0)]


def test_lemniscate_leading_ideal():
    G = buchberger(jacobian(P(LEMNISCATE)))
    assert set(G.lt_generators) == LEMNISCATE_LI
    assert set(leading_term_generators(G)) == LEMNISCATE_LI


def test_cayley_cubic_series_prefix():
    f = parse_polynomial("w*(x*y+x*z+y*z)+x*y*z", VariableSet.parse("x,y,z,w"))
    G = buchberger(jacobian(f))
    assert hilbert_function(G, 6) == [1, 4, 6, 4, 4, 4, 4]


def test_degree_cap_truncates_but_keeps_low_degrees():
    f = P(LEMNISCATE)
    full = buchberger(jacobian(f))
    capped = buchberger(jacobian(f), degree_cap=4)
    assert capped.truncated and not full.truncated
    assert hilbert_function(capped, 4) == hilbert_function(full, 4)


def test_dehomogenized_basis_matches_direct_computation():
    f = P(LEMNISCATE)
    G = dehomogenize_basis(buchberger(jacobian(f)), 2)
    direct = buchberger([dehomogenize(p, 2) for p in jacobian(f)])
    assert set(G.generators) == set(direct.generators)


small_polys = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), coeffs, min_size=1, max_size=4).map(
    lambda d: Polynomial(d, 3)
).filter(lambda p: not p.is_zero())


@settings(max_examples=40)
@given(st.lists(small_polys, min_size=1, max_size=3))
def test_buchberger_properties(gens):
    G = buchberger(gens)
    for g in gens:
        assert G.normal_form(g).is_zero()
    assert_groebner_criterion(G)
    assert_reduced(G)
    assert buchberger(gens).generators == G.generators
    # adding redundant generators leaves the reduced basis unchanged
    assert buchberger(gens + [gens[0] * P("x+1")]).generators == G.generators


@settings(max_examples=40)
@given(st.lists(small_polys, min_size=1, max_size=3))
def test_buchberger_matches_sympy(gens):
    x, y, z = sympy.symbols("x y z")
    oracle = sympy.groebner([to_sympy(g) for g in gens], x, y, z, order="grevlex")
    expected = {sympy.expand(p / sympy.LC(p, x, y, z, order="grevlex")) for p in oracle.exprs}
    assert {to_sympy(g) for g in buchberger(gens).generators} == expected


def test_criterion_on_catalog_bases(catalog):
    for e in catalog:
        f = e.parse()
        if f.nvars > 4:
            continue
        G = buchberger(jacobian(f))
        assert_groebner_criterion(G)
        assert_reduced(G)
