"""Hilbert functions of quotients by monomial (leading-term) ideals."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .groebner import GroebnerBasis
from .ring import Monomial

INFINITE = "infinite"


@dataclass(frozen=True)
class HilbertData:
    dims: tuple[int, ...]
    smooth_dims: tuple[int, ...]
    T: int

    @property
    def stable_value(self) -> int:
        return self.dims[self.T + 1]


def _walk(gens: Sequence[Monomial], nvars: int, k: int, emit) -> int:
    """Depth-first enumeration of degree-``k`` monomials avoiding ``gens``.

    ``emit`` is called with each standard monomial if given; otherwise whole
    unconstrained subtrees are counted with a binomial coefficient.
    """
    def rec(i: int, left: int, alive: list[Monomial], prefix: list[int]) -> int:
        if not alive and emit is None:
            return comb(left + nvars - i - 1, nvars - i - 1)
        if i == nvars - 1:
            if any(g[i] <= left for g in alive):
                return 0
            if emit is not None:
                emit(tuple(prefix + [left]))
            return 1
        total = 0
        for e in range(left + 1):
            # generators that can still divide after fixing e_i = e
            nxt = [g for g in alive if g[i] <= e]
            total += rec(i + 1, left - e, nxt, prefix + [e] if emit is not None else prefix)
        return total

    if k < 0:
        return 0
    alive = [g for g in gens if sum(g) <= k]
    return rec(0, k, alive, [])


def standard_monomial_count(lt_gens: Sequence[Monomial], k: int, nvars: int | None = None) -> int:
    """Number of degree-``k`` monomials divisible by no element of ``lt_gens``."""
    if nvars is None:
        if not lt_gens:
            raise ValueError("nvars is required when lt_gens is empty")
        nvars = len(lt_gens[0])
    return _walk(lt_gens, nvars, k, None)


def standard_monomials(lt_gens: Sequence[Monomial], k: int, nvars: int) -> list[Monomial]:
    out: list[Monomial] = []
    _walk(lt_gens, nvars, k, out.append)
    return out


def hilbert_function(G: GroebnerBasis, kmax: int) -> list[int]:
    """``dim (S/I)_k`` for ``k = 0..kmax``."""
    if G.degree_cap is not None and G.truncated and kmax > G.degree_cap:
        raise ValueError(f"basis truncated at degree {G.degree_cap}, cannot count degree {kmax}")
    return [standard_monomial_count(G.lt_generators, k, G.nvars) for k in range(kmax + 1)]


def smooth_series(n: int, d: int) -> list[int]:
    """Coefficients of (1 + t + ... + t^(d-2))^(n+1), padded with one zero."""
    if n < 1 or d < 2:
        raise ValueError(f"need n >= 1 and d >= 2, got n={n}, d={d}")
    coeffs = [1]
    block = [1] * (d - 1)
    for _ in range(n + 1):
        out = [0] * (len(coeffs) + len(block) - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += a * b
        coeffs = out
    return coeffs + [0]


def pure_powers(lt_gens: Sequence[Monomial], nvars: int) -> list[int | None]:
    """Smallest ``e`` with ``x_i^e`` among the generators, per variable."""
    best: list[int | None] = [None] * nvars
    for g in lt_gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            i = support[0]
            if best[i] is None or g[i] < best[i]:
                best[i] = g[i]
        elif not support:
            return [0] * nvars
    return best


def quotient_basis(G: GroebnerBasis) -> list[Monomial]:
    """All standard monomials of a zero-dimensional ideal, ascending degrevlex."""
    bounds = pure_powers(G.lt_generators, G.nvars)
    if any(b is None for b in bounds):
        raise ValueError("quotient is not finite-dimensional")
    if any(b == 0 for b in bounds):
        return []
    out: list[Monomial] = []
    k = 0
    top = sum(b - 1 for b in bounds)
    while k <= top:
        out.extend(reversed(standard_monomials(G.lt_generators, k, G.nvars)))
        k += 1
    return out


def vector_space_dimension(G: GroebnerBasis) -> int | str:
    """``dim_Q S/I``, or ``"infinite"`` when some variable has no pure power in LT(I)."""
    bounds = pure_powers(G.lt_generators, G.nvars)
    if any(b is None for b in bounds):
        return INFINITE
    if any(b == 0 for b in bounds):
        return 0
    top = sum(b - 1 for b in bounds)
    return sum(standard_monomial_count(G.lt_generators, k, G.nvars) for k in range(top + 1))


def hilbert_data(G: GroebnerBasis, n: int, d: int) -> HilbertData:
    T = (n + 1) * (d - 2)
    return HilbertData(
        dims=tuple(hilbert_function(G, T + 1)),
        smooth_dims=tuple(smooth_series(n, d)),
        T=T,
    )
