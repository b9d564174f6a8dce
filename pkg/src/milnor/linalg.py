"""Exact dense linear algebra over Q (lists of Fractions)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

try:
    from gmpy2 import gcd as _big_gcd, mpz as _big
except ImportError:  # pragma: no cover
    _big_gcd, _big = gcd, int

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = to_matrix(rows)
    if not a:
        return a, []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        prow = a[r]
        nz = [j for j in range(col, ncols) if prow[j]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                factor = a[i][col]
                row = a[i]
                for j in nz:
                    row[j] -= factor * prow[j]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of ``{v : A v = 0}``, each vector with first nonzero entry 1."""
    if ncols is None:
        ncols = len(rows[0])
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for fj in free:
        v = [Fraction(0)] * ncols
        v[fj] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fj]
        lead = next(x for x in v if x)
        basis.append([x / lead for x in v])
    return basis


def _integer_row(v: Sequence) -> list[int]:
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    return [_big(int(x * den)) for x in fr]


def _primitive(v: list[int]) -> list[int]:
    c = _big_gcd(*v)
    if c > 1:
        return [x // c for x in v]
    return v


class IncrementalEchelon:
    """Row space built one vector at a time, fraction-free.

    Rows are primitive integer vectors in echelon form (insertion order); a
    reduced vector is only defined up to a nonzero scalar.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[int]]] = []

    def reduce(self, v: Sequence) -> list[int]:
        v = _integer_row(v)
        for pc, row in self.rows:
            a = v[pc]
            if a:
                b = row[pc]
                g = _big_gcd(a, b)
                a, b = a // g, b // g
                v = _primitive([b * x - a * y for x, y in zip(v, row)])
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; False if it was already in the span."""
        return self.insert_reduced(self.reduce(v))

    def insert_reduced(self, v: list[int]) -> bool:
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            return False
        self.rows.append((pc, v))
        return True

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)
