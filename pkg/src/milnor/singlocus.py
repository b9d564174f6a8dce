"""Singular scheme of a projective hypersurface, studied in one affine chart.

The chart is validated, not assumed: the dehomogenised Jacobian ideal must
have quotient dimension equal to the global Tjurina number read off the
Hilbert function.  Distinct points are counted through a Seidenberg-style
radical (adjoin squarefree parts of univariate minimal polynomials).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LimitExceededError
from .groebner import GroebnerBasis, buchberger, dehomogenize_basis
from .hilbert import INFINITE, quotient_basis, vector_space_dimension
from .linalg import IncrementalEchelon
from .ring import Polynomial, apply_linear_substitution, dehomogenize, jacobian

DEFAULT_MAX_RETRIES = 8
DEFAULT_MAX_CANDIDATES = 64
MEETS_LOCUS = "meets singular locus"
SHEAR_RANGE = 3
SHEAR_DENSITY = 0.5


@dataclass(frozen=True)
class ChartTransform:
    matrix: tuple[tuple[int, ...], ...]
    dehom_index: int
    seed: int | None = None

    @classmethod
    def identity(cls, nvars: int, seed: int | None = None) -> "ChartTransform":
        m = tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars))
        return cls(m, nvars - 1, seed)

    @property
    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n))


@dataclass(frozen=True)
class SingularLocusSummary:
    tau_affine: int
    num_points: int
    nodal: bool
    chart: ChartTransform
    attempts: tuple = ()


def random_chart(rng: random.Random, nvars: int, seed: int | None = None) -> ChartTransform:
    """Chart whose hyperplane at infinity is ``x_j + sum_i c_i x_i = 0``.

    ``j`` is a random pivot; each ``c_i`` is nonzero with probability about
    ``SHEAR_DENSITY`` and then drawn from ``[-SHEAR_RANGE, SHEAR_RANGE]``.
    The substitution is ``x_i = y_(pos i)`` for ``i != j`` and
    ``x_j = y_last - sum_i c_i y_(pos i)``, a single elementary shear composed
    with a coordinate permutation, so ``y_last`` is the chosen linear form.
    Touching one coordinate, with few nonzero ``c_i``, keeps the transformed
    coefficients small (dense shears are far slower on the octics), and
    dehomogenising at the last (degrevlex-smallest) variable lets the
    homogeneous Gröbner basis be dehomogenised directly.
    """
    j = rng.randrange(nvars)
    c = [rng.randint(-SHEAR_RANGE, SHEAR_RANGE) if rng.random() < SHEAR_DENSITY else 0 for _ in range(nvars)]
    others = [i for i in range(nvars) if i != j]
    matrix = [[0] * nvars for _ in range(nvars)]
    for pos, i in enumerate(others):
        matrix[i][pos] = 1
        matrix[j][pos] = -c[i]
    matrix[j][nvars - 1] = 1
    return ChartTransform(tuple(map(tuple, matrix)), nvars - 1, seed)


def transformed(f: Polynomial, chart: ChartTransform) -> Polynomial:
    return f if chart.is_identity else apply_linear_substitution(f, chart.matrix)


def affine_jacobian_ideal(f: Polynomial, chart: ChartTransform) -> list[Polynomial]:
    if not f.is_homogeneous():
        raise ValueError("affine_jacobian_ideal expects a homogeneous polynomial")
    return [dehomogenize(p, chart.dehom_index) for p in jacobian(transformed(f, chart))]


def affine_jacobian_basis(f: Polynomial, chart: ChartTransform) -> GroebnerBasis:
    """Gröbner basis of the affine Jacobian ideal in ``chart``.

    When the chart dehomogenises the last variable, the homogeneous basis is
    computed first and dehomogenised, which is far cheaper than running
    Buchberger on the inhomogeneous generators.
    """
    if chart.dehom_index == f.nvars - 1:
        G = buchberger(jacobian(transformed(f, chart)))
        return dehomogenize_basis(G, chart.dehom_index)
    return buchberger(affine_jacobian_ideal(f, chart))


def restrict_to_hyperplane(p: Polynomial, i: int) -> Polynomial:
    """``p`` with ``x_i = 0``, as a polynomial in the remaining variables."""
    return Polynomial(
        {m[:i] + m[i + 1:]: c for m, c in p.terms.items() if m[i] == 0},
        p.nvars - 1,
    )


def hyperplane_misses_locus(f: Polynomial, chart: ChartTransform) -> bool:
    """True when no singular point lies on the chart's hyperplane at infinity.

    That hyperplane is ``y_i = 0`` for ``i = chart.dehom_index``; it avoids
    ``V(J)`` exactly when the partials restricted to it generate an ideal of
    finite colength.  This is one variable fewer than the chart itself and
    costs a small fraction of the affine basis.
    """
    i = chart.dehom_index
    gens = [restrict_to_hyperplane(p, i) for p in jacobian(transformed(f, chart))]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    return vector_space_dimension(buchberger(gens)) != INFINITE


def select_valid_chart(
    f: Polynomial,
    tau: int,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
    try_identity: bool = True,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> tuple[ChartTransform, GroebnerBasis, tuple]:
    """First chart whose affine Tjurina quotient has dimension ``tau``.

    Candidates whose hyperplane at infinity meets the singular locus are
    screened out cheaply (recorded as ``MEETS_LOCUS``); at most ``max_retries``
    survivors get the full check.  Returns the chart, its Gröbner basis and
    the attempt record.
    """
    if tau <= 0:
        raise ValueError("smooth hypersurface: no chart needed")
    if max_retries < 1 or max_candidates < 1:
        raise ValueError("max_retries and max_candidates must be at least 1")
    rng = random.Random(seed)
    attempts: list = []
    checked = 0
    for k in range(max_candidates):
        if k == 0 and try_identity:
            chart = ChartTransform.identity(f.nvars, seed)
        else:
            chart = random_chart(rng, f.nvars, seed)
        if not hyperplane_misses_locus(f, chart):
            attempts.append(MEETS_LOCUS)
            continue
        G = affine_jacobian_basis(f, chart)
        dim = vector_space_dimension(G)
        attempts.append(dim)
        if dim == tau:
            return chart, G, tuple(attempts)
        checked += 1
        if checked >= max_retries:
            break
    exc = LimitExceededError(
        f"no valid chart among {len(attempts)} candidates (affine dimensions {attempts}, expected {tau}); "
        "singularities may be non-isolated"
    )
    exc.attempts = tuple(attempts)
    raise exc


# -- univariate helpers (coefficient lists, constant term first) ------------

def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _int_primitive(c: list[int]) -> list[int]:
    g = math.gcd(*c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lb = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        la = a[-1]
        g = math.gcd(la, lb)
        fa, fb = lb // g, la // g
        a = [fa * x for x in a]
        for i, x in enumerate(b):
            a[i + shift] -= fb * x
        a.pop()
        if a and any(a):
            a = _trim(a)
            if a:
                g = math.gcd(*a)
                if g > 1:
                    a = [x // g for x in a]
    return _trim(a)


def _gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer coefficient lists (constant term first)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pseudo_rem(a, b)
    return _int_primitive(a)


def _exact_div(a: list[int], b: list[int]) -> list[Fraction]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, x in enumerate(b):
            a[i + shift] -= c * x
        a.pop()
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return q


def _coeffs(m: Polynomial) -> list[int]:
    """Integer coefficient list of a nonzero univariate polynomial (scaled)."""
    if m.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    out = [Fraction(0)] * (m.degree() + 1)
    for (e,), c in m.terms.items():
        out[e] = c
    den = 1
    for c in out:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _int_primitive([int(c * den) for c in out])


def _from_coeffs(c: Sequence) -> Polynomial:
    return Polynomial({(e,): x for e, x in enumerate(c) if x}, 1)


def squarefree_part(m: Polynomial) -> Polynomial:
    """``m / gcd(m, m')`` made monic."""
    if m.is_zero():
        raise ValueError("squarefree part of zero")
    c = _coeffs(m)
    if len(c) == 1:
        return Polynomial.constant(1, 1)
    deriv = [i * x for i, x in enumerate(c)][1:]
    g = _gcd(c, deriv)
    if len(g) == 1:
        return _from_coeffs(c).monic()
    return _from_coeffs(_exact_div(c, g)).monic()


def embed_univariate(m: Polynomial, i: int, nvars: int) -> Polynomial:
    return Polynomial({tuple(e if k == i else 0 for k in range(nvars)): c for (e,), c in m.terms.items()}, nvars)


def minimal_polynomial(G: GroebnerBasis, i: int) -> Polynomial:
    """Monic minimal polynomial of ``x_i`` acting on ``S/I`` (univariate)."""
    if vector_space_dimension(G) == INFINITE:
        raise ValueError("quotient is not finite-dimensional")
    basis = quotient_basis(G)
    D = len(basis)
    if D == 0:
        return Polynomial.constant(1, 1)
    index = {m: k for k, m in enumerate(basis)}
    x = Polynomial.variable(i, G.nvars)
    # rows are [NF(x^k) coordinates | unit vector e_k]; a row whose left block
    # vanishes after elimination carries the relation in its right block
    ech = IncrementalEchelon(D + D + 1)
    power = G.normal_form(Polynomial.constant(1, G.nvars))
    for k in range(D + 1):
        row = [Fraction(0)] * (2 * D + 1)
        for m, c in power.terms.items():
            row[index[m]] = c
        row[D + k] = Fraction(1)
        reduced = ech.reduce(row)
        if not any(reduced[:D]):
            relation = reduced[D:D + k + 1]
            lead = relation[k]
            return _from_coeffs([Fraction(int(c), int(lead)) for c in relation])
        ech.insert_reduced(reduced)
        power = G.normal_form(power * x)
    raise AssertionError("no relation found within quotient dimension")


def zero_dimensional_radical(G: GroebnerBasis) -> GroebnerBasis:
    dim = vector_space_dimension(G)
    if dim == INFINITE:
        raise ValueError("quotient is not finite-dimensional")
    while True:
        extra = []
        for i in range(G.nvars):
            m = minimal_polynomial(G, i)
            r = squarefree_part(m)
            if r.degree() < m.degree():
                extra.append(embed_univariate(r, i, G.nvars))
        if not extra:
            # every m_i is squarefree and lies in I, so I is already radical
            return G
        R = buchberger(list(G.generators) + extra)
        new_dim = vector_space_dimension(R)
        if new_dim == dim:
            return R
        G, dim = R, new_dim


def singularity_census(
    f: Polynomial,
    tau: int,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
    try_identity: bool = True,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SingularLocusSummary:
    chart, G, attempts = select_valid_chart(f, tau, seed, max_retries, try_identity, max_candidates)
    tau_affine = vector_space_dimension(G)
    radical = zero_dimensional_radical(G)
    num_points = vector_space_dimension(radical)
    return SingularLocusSummary(tau_affine, num_points, num_points == tau_affine, chart, attempts)
