"""Buchberger's algorithm over Q in degrevlex order.

Internally monomials are packed into single integers whose fields hold the
prefix sums ``e_0, e_0+e_1, ..., e_0+...+e_n`` (the last one in the most
significant field).  Lexicographic comparison of that vector is exactly
degrevlex, and it is additive, so monomial products are integer additions
and the order is plain integer comparison.  Coefficients are kept as
integers (fraction-free reduction, primitive parts); the public interface
hands out monic polynomials with :class:`~fractions.Fraction` coefficients.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

try:  # GMP integers roughly halve the cost of large bases
    from gmpy2 import gcd as _gcd, mpz as _big
except ImportError:  # pragma: no cover
    _gcd, _big = math.gcd, int

from .ring import Monomial, Polynomial, degrevlex_key, dehomogenize, monomial_divides, monomial_lcm

FIELD_BITS = 16


class _Codec:
    def __init__(self, nvars: int, width: int = FIELD_BITS):
        self.nvars = nvars
        self.width = width
        self.mask = (1 << width) - 1
        self.top = width * (nvars - 1)
        gw = width + 1
        self.gw = gw
        self.guards = sum(1 << (gw * i + width) for i in range(nvars))
        self._packed: dict[int, int] = {}

    def encode(self, m: Monomial) -> int:
        code = 0
        s = 0
        w = self.width
        for k, e in enumerate(m):
            s += e
            code |= s << (w * k)
        if s > self.mask:
            raise OverflowError(f"degree {s} too large for packed monomials")
        return code

    def decode(self, code: int) -> Monomial:
        out = []
        prev = 0
        w, mask = self.width, self.mask
        for k in range(self.nvars):
            s = (code >> (w * k)) & mask
            out.append(s - prev)
            prev = s
        return tuple(out)

    def degree(self, code: int) -> int:
        return code >> self.top

    def packed(self, code: int) -> int:
        """Exponents side by side with a guard bit per field, for divisibility tests."""
        p = self._packed.get(code)
        if p is None:
            p = 0
            gw = self.gw
            for i, e in enumerate(self.decode(code)):
                p |= e << (gw * i)
            self._packed[code] = p
        return p

    def lcm(self, a: int, b: int) -> int:
        return self.encode(monomial_lcm(self.decode(a), self.decode(b)))

    def divides(self, a: int, b: int) -> bool:
        g = self.guards
        return ((self.packed(b) | g) - self.packed(a)) & g == g


class _Elem:
    """Basis element: primitive integer polynomial, terms in descending order."""

    __slots__ = ("lm", "lc", "tail", "packed", "sugar", "deg")

    def __init__(self, terms: dict[int, int], codec: _Codec, sugar: int | None = None):
        items = sorted(terms.items(), reverse=True)
        self.lm, self.lc = items[0]
        if self.lc < 0:
            items = [(m, -c) for m, c in items]
            self.lc = -self.lc
        self.tail = items[1:]
        self.packed = codec.packed(self.lm)
        self.deg = codec.degree(self.lm)
        self.sugar = self.deg if sugar is None else sugar

    def terms(self) -> dict[int, int]:
        d = dict(self.tail)
        d[self.lm] = self.lc
        return d


class CriticalPair(NamedTuple):
    sugar: int
    lcm: int
    i: int
    j: int


def _content(values) -> int:
    return _gcd(*values)


class _Reducer:
    """A set of reducers plus the reduction routine."""

    def __init__(self, codec: _Codec):
        self.codec = codec
        self.elems: list[_Elem] = []

    def find(self, code: int) -> _Elem | None:
        pb = self.codec.packed(code) | self.codec.guards
        g = self.codec.guards
        for e in self.elems:
            if (pb - e.packed) & g == g:
                return e
        return None

    def reduce(self, p: dict[int, int], full: bool = True) -> tuple[dict[int, int], int]:
        """Reduce ``p`` in place.  Returns ``(remainder, scale)`` with
        ``remainder == scale * NF(p)`` (``scale`` a nonzero integer)."""
        heap = [-c for c in p]
        heapq.heapify(heap)
        done: dict[int, int] = {}
        scale = 1
        steps = 0
        pop, push = heapq.heappop, heapq.heappush
        find = self.find
        while heap:
            c = -pop(heap)
            a = p.pop(c, 0)
            if not a:
                continue
            r = find(c)
            if r is None:
                done[c] = a
                if not full:
                    done.update(p)
                    p.clear()
                    break
                continue
            lc = r.lc
            g = _gcd(a, lc)
            mp = lc // g
            mr = a // g
            if mp != 1:
                for k in p:
                    p[k] *= mp
                for k in done:
                    done[k] *= mp
                scale *= int(mp)
            shift = c - r.lm
            for m, coef in r.tail:
                m += shift
                v = p.get(m)
                if v is None:
                    p[m] = -mr * coef
                    push(heap, -m)
                else:
                    v -= mr * coef
                    if v:
                        p[m] = v
                    else:
                        del p[m]
            steps += 1
            if steps & 31 == 0 and (p or done):
                cont = _content(list(p.values()) + list(done.values()))
                if cont > 1:
                    for k in p:
                        p[k] //= cont
                    for k in done:
                        done[k] //= cont
                    scale = Fraction(scale, int(cont))
        return done, scale


def _primitive(d: dict[int, int]) -> dict[int, int]:
    cont = _content(d.values())
    if cont > 1:
        return {k: v // cont for k, v in d.items()}
    return d


def _to_int_terms(p: Polynomial, codec: _Codec) -> tuple[dict[int, int], int]:
    """Clear denominators.  Returns ``(terms, multiplier)``."""
    den = 1
    for _, c in p.terms.items():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {codec.encode(m): _big(int(c * den)) for m, c in p.terms.items()}, den


def _from_int_terms(d: dict[int, int], codec: _Codec, divisor=1) -> Polynomial:
    divisor = Fraction(divisor) if isinstance(divisor, Fraction) else Fraction(int(divisor))
    return Polynomial({codec.decode(k): Fraction(int(v)) / divisor for k, v in d.items()}, codec.nvars)


@dataclass
class GroebnerBasis:
    """Reduced monic Gröbner basis (possibly truncated at ``degree_cap``)."""

    generators: list[Polynomial]
    lt_generators: list[Monomial]
    nvars: int
    degree_cap: int | None = None
    truncated: bool = False
    stats: dict = field(default_factory=dict, compare=False, repr=False)
    _engine: _Reducer | None = field(default=None, compare=False, repr=False)

    def engine(self) -> _Reducer:
        if self._engine is None:
            codec = _Codec(self.nvars)
            red = _Reducer(codec)
            for g in self.generators:
                terms, _ = _to_int_terms(g, codec)
                red.elems.append(_Elem(terms, codec))
            self._engine = red
        return self._engine

    def normal_form(self, p: Polynomial) -> Polynomial:
        return _normal_form_with(self.engine(), p)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_whole_ring(self) -> bool:
        return any(sum(m) == 0 for m in self.lt_generators)


def _normal_form_with(red: _Reducer, p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    terms, den = _to_int_terms(p, red.codec)
    rem, scale = red.reduce(terms)
    return _from_int_terms(rem, red.codec, Fraction(scale) * den)


def normal_form(p: Polynomial, G: Sequence[Polynomial] | GroebnerBasis) -> Polynomial:
    """Fully reduce ``p`` by ``G``; unique when ``G`` is a Gröbner basis."""
    if isinstance(G, GroebnerBasis):
        return G.normal_form(p)
    if not G:
        return p
    codec = _Codec(p.nvars)
    red = _Reducer(codec)
    for g in G:
        if g.nvars != p.nvars:
            raise ValueError("variable-count mismatch")
        if g.is_zero():
            raise ValueError("reducers must be nonzero")
        terms, _ = _to_int_terms(g, codec)
        red.elems.append(_Elem(terms, codec))
    return _normal_form_with(red, p)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lf, lg)
    mf = tuple(a - b for a, b in zip(lcm, lf))
    mg = tuple(a - b for a, b in zip(lcm, lg))
    return f.mul_monomial(mf, 1 / f.leading_coefficient()) - g.mul_monomial(
        mg, 1 / g.leading_coefficient()
    )


def leading_term_generators(G: GroebnerBasis) -> list[Monomial]:
    return minimal_monomials(g.leading_monomial() for g in G.generators)


def minimal_monomials(monomials) -> list[Monomial]:
    """Minimal generators of the monomial ideal, sorted by degrevlex."""
    ms = sorted(set(monomials), key=degrevlex_key)
    out: list[Monomial] = []
    for m in ms:
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def buchberger(gens: Sequence[Polynomial], degree_cap: int | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed by least sugar, then least lcm (the normal strategy
    for homogeneous input), after the Gebauer-Möller criteria.  With
    ``degree_cap`` pairs whose lcm has larger degree are skipped; for
    homogeneous input the basis is then exact in degrees ``<= degree_cap``.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("variable-count mismatch among generators")
    codec = _Codec(nvars)
    red = _Reducer(codec)
    polys: list[_Elem] = []
    active: list[int] = []
    pairs: list[CriticalPair] = []
    stats = {"pairs_reduced": 0, "zero_reductions": 0, "skipped_by_cap": 0}
    truncated = False

    def lcm_of(i: int, j: int) -> int:
        return codec.lcm(polys[i].lm, polys[j].lm)

    def coprime(i: int, j: int) -> bool:
        return lcm_of(i, j) == polys[i].lm + polys[j].lm

    def pair_sugar(i: int, j: int, lcm: int) -> int:
        a, b = polys[i], polys[j]
        return max(a.sugar - a.deg, b.sugar - b.deg) + codec.degree(lcm)

    def update(h: int) -> None:
        nonlocal pairs, active
        hlm = polys[h].lm
        cands = [(g, lcm_of(h, g)) for g in active]
        keep: list[tuple[int, int]] = []
        for idx, (g, lcm) in enumerate(cands):
            if lcm == hlm + polys[g].lm:
                keep.append((g, lcm))
                continue
            others = [l2 for _, l2 in cands[idx + 1:]] + [l2 for _, l2 in keep]
            if not any(codec.divides(l2, lcm) for l2 in others):
                keep.append((g, lcm))
        new = [
            CriticalPair(pair_sugar(g, h, lcm), lcm, g, h)
            for g, lcm in keep
            if lcm != hlm + polys[g].lm
        ]
        old = []
        for p in pairs:
            if (
                not codec.divides(hlm, p.lcm)
                or lcm_of(p.i, h) == p.lcm
                or lcm_of(p.j, h) == p.lcm
            ):
                old.append(p)
        pairs = old + new
        heapq.heapify(pairs)
        active = [g for g in active if not codec.divides(hlm, polys[g].lm)] + [h]
        red.elems = [polys[g] for g in active]

    def add(terms: dict[int, int], sugar: int | None) -> None:
        polys.append(_Elem(_primitive(terms), codec, sugar))
        update(len(polys) - 1)

    order = sorted(gens, key=lambda g: degrevlex_key(g.leading_monomial()))
    for g in order:
        terms, _ = _to_int_terms(g, codec)
        sugar = max(sum(m) for m in g.terms)
        rem, _ = red.reduce(terms)
        if rem:
            add(rem, sugar)

    while pairs:
        pair = heapq.heappop(pairs)
        if degree_cap is not None and codec.degree(pair.lcm) > degree_cap:
            truncated = True
            stats["skipped_by_cap"] += 1
            continue
        a, b = polys[pair.i], polys[pair.j]
        sa, sb = pair.lcm - a.lm, pair.lcm - b.lm
        # b.lc * x^sa * a - a.lc * x^sb * b, leading terms cancel
        gcd = _gcd(a.lc, b.lc)
        ca, cb = b.lc // gcd, a.lc // gcd
        s: dict[int, int] = {}
        for m, c in a.tail:
            s[m + sa] = ca * c
        for m, c in b.tail:
            k = m + sb
            v = s.get(k, 0) - cb * c
            if v:
                s[k] = v
            else:
                s.pop(k, None)
        stats["pairs_reduced"] += 1
        if not s:
            stats["zero_reductions"] += 1
            continue
        rem, _ = red.reduce(s)
        if not rem:
            stats["zero_reductions"] += 1
            continue
        add(rem, pair.sugar)

    basis = _interreduce([polys[i] for i in active], codec)
    generators = [_monic(e, codec) for e in basis]
    return GroebnerBasis(
        generators=generators,
        lt_generators=minimal_monomials(codec.decode(e.lm) for e in basis),
        nvars=nvars,
        degree_cap=degree_cap,
        truncated=truncated,
        stats=stats,
    )


def dehomogenize_basis(G: GroebnerBasis, i: int) -> GroebnerBasis:
    """Set the last variable to 1 in a full homogeneous degrevlex basis.

    In degrevlex the last variable divides a homogeneous polynomial exactly
    when it divides its leading monomial, so the images of a Gröbner basis
    form a Gröbner basis of the dehomogenised ideal; this only makes it
    reduced.
    """
    if i != G.nvars - 1:
        raise ValueError("only the last variable can be dehomogenised")
    if G.truncated:
        raise ValueError("cannot dehomogenise a truncated basis")
    if G.nvars == 1:
        raise ValueError("need at least two variables")
    codec = _Codec(G.nvars - 1)
    elems = []
    for g in G.generators:
        h = dehomogenize(g, i)
        terms, _ = _to_int_terms(h, codec)
        elems.append(_Elem(terms, codec))
    elems.sort(key=lambda e: e.lm)
    minimal: list[_Elem] = []
    for e in elems:
        if not any(codec.divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    basis = _interreduce(minimal, codec)
    return GroebnerBasis(
        generators=[_monic(e, codec) for e in basis],
        lt_generators=minimal_monomials(codec.decode(e.lm) for e in basis),
        nvars=G.nvars - 1,
    )


def _interreduce(elems: list[_Elem], codec: _Codec) -> list[_Elem]:
    elems = sorted(elems, key=lambda e: e.lm)
    out: list[_Elem] = []
    for i, e in enumerate(elems):
        red = _Reducer(codec)
        red.elems = elems[:i] + elems[i + 1:]
        tail = dict(e.tail)
        if tail:
            rem, scale = red.reduce(tail)
            # e.lc * x^lm * scale + rem  is a multiple of the reduced element
            scale = Fraction(scale)
            num, den = scale.numerator, scale.denominator
            terms = {k: v * den for k, v in rem.items()}
            terms[e.lm] = e.lc * num
            out.append(_Elem(_primitive(terms), codec, e.sugar))
        else:
            out.append(e)
    return out


def _monic(e: _Elem, codec: _Codec) -> Polynomial:
    return _from_int_terms(e.terms(), codec, e.lc)
