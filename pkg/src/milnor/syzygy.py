"""Graded syzygies among the partials of a plane curve, by exact linear algebra.

A syzygy of degree ``m`` is a triple ``(a_0, a_1, a_2)`` of forms of degree
``m`` with ``sum a_i f_i = 0``.  The trivial (Koszul) ones are spanned by the
multiples of ``f_j e_i - f_i e_j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import IncrementalEchelon, nullspace, rank
from .ring import Monomial, Polynomial, jacobian, monomials_of_degree


@dataclass(frozen=True)
class SyzygyVector:
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))


@dataclass(frozen=True)
class SyzygySpace:
    degree: int
    basis: tuple[SyzygyVector, ...]
    koszul_dimension: int
    nontrivial_dimension: int
    nontrivial_basis: tuple[SyzygyVector, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _check_plane_curve(f: Polynomial) -> None:
    if f.nvars != 3:
        raise ValueError(f"syzygies are only implemented for plane curves (n = 2), got n = {f.nvars - 1}")
    if not f.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")


def _unknowns(m: int) -> list[tuple[int, Monomial]]:
    mons = monomials_of_degree(3, m)
    return [(i, mono) for i in range(3) for mono in mons]


def _to_vector(v: SyzygyVector | Sequence[Polynomial], m: int) -> list[Fraction]:
    comps = v.components if isinstance(v, SyzygyVector) else tuple(v)
    vec = []
    for i, mono in _unknowns(m):
        vec.append(comps[i].coefficient(mono))
    return vec


def _from_vector(vec: Sequence[Fraction], m: int) -> SyzygyVector:
    comps: list[dict] = [{}, {}, {}]
    for x, (i, mono) in zip(vec, _unknowns(m)):
        if x:
            comps[i][mono] = x
    return SyzygyVector(tuple(Polynomial(c, 3) for c in comps))


def _koszul_vectors(partials: list[Polynomial], m: int, d: int) -> list[list[Fraction]]:
    k = m - (d - 1)
    if k < 0:
        return []
    vecs = []
    zero = Polynomial.zero(3)
    for i in range(3):
        for j in range(i + 1, 3):
            for mono in monomials_of_degree(3, k):
                comps = [zero, zero, zero]
                comps[i] = partials[j].mul_monomial(mono)
                comps[j] = -partials[i].mul_monomial(mono)
                vecs.append(_to_vector(comps, m))
    return vecs


def koszul_subspace_dimension(f: Polynomial, m: int) -> int:
    _check_plane_curve(f)
    vecs = _koszul_vectors(jacobian(f), m, f.degree())
    return rank(vecs) if vecs else 0


def syzygies_of_degree(f: Polynomial, m: int) -> SyzygySpace:
    """All degree-``m`` syzygies of ``(f_x, f_y, f_z)``; basis vectors normalised."""
    _check_plane_curve(f)
    if m < 0:
        raise ValueError("degree must be non-negative")
    d = f.degree()
    partials = jacobian(f)
    unknowns = _unknowns(m)
    targets = monomials_of_degree(3, m + d - 1)
    row_of = {mono: r for r, mono in enumerate(targets)}
    matrix = [[Fraction(0)] * len(unknowns) for _ in targets]
    for col, (i, mono) in enumerate(unknowns):
        for tm, c in partials[i].terms.items():
            matrix[row_of[tuple(a + b for a, b in zip(tm, mono))]][col] += c
    kernel = nullspace(matrix, len(unknowns))
    koszul = _koszul_vectors(partials, m, d)
    ech = IncrementalEchelon(len(unknowns))
    for v in koszul:
        ech.add(v)
    kdim = ech.rank
    extra = [v for v in kernel if ech.add(v)]
    return SyzygySpace(
        degree=m,
        basis=tuple(_from_vector(v, m) for v in kernel),
        koszul_dimension=kdim,
        nontrivial_dimension=len(kernel) - kdim,
        nontrivial_basis=tuple(_from_vector(v, m) for v in extra),
    )


def in_span(space: SyzygySpace, v: SyzygyVector) -> bool:
    ech = IncrementalEchelon(3 * len(monomials_of_degree(3, space.degree)))
    for b in space.basis:
        ech.add(_to_vector(b, space.degree))
    return ech.contains(_to_vector(v, space.degree))


def minimal_syzygy_degree_direct(f: Polynomial, mmax: int) -> int:
    """Least ``m <= mmax`` carrying a syzygy outside the Koszul span."""
    _check_plane_curve(f)
    for m in range(mmax + 1):
        if syzygies_of_degree(f, m).nontrivial_dimension > 0:
            return m
    raise ValueError(f"no nontrivial syzygy in degrees 0..{mmax}")


def verify_syzygy(f: Polynomial, v: SyzygyVector | Sequence[Polynomial]) -> bool:
    comps = v.components if isinstance(v, SyzygyVector) else tuple(v)
    if len(comps) != f.nvars:
        raise ValueError(f"expected {f.nvars} components, got {len(comps)}")
    total = Polynomial.zero(f.nvars)
    for a, p in zip(comps, jacobian(f)):
        total = total + a * p
    return total.is_zero()


def matrix_product(a: Sequence[Sequence[Polynomial]], b: Sequence[Sequence[Polynomial]]) -> list[list[Polynomial]]:
    """Product of polynomial matrices (lists of rows)."""
    if len(a[0]) != len(b):
        raise ValueError("inner dimensions differ")
    nv = a[0][0].nvars
    out = []
    for row in a:
        out_row = []
        for j in range(len(b[0])):
            acc = Polynomial.zero(nv)
            for k, x in enumerate(row):
                acc = acc + x * b[k][j]
            out_row.append(acc)
        out.append(out_row)
    return out
