"""Sparse multivariate polynomials over Q.

Monomials are exponent tuples; coefficients are :class:`fractions.Fraction`.
The only monomial order is degree-reverse-lexicographic with
``x_0 > x_1 > ... > x_n``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError

Monomial = tuple[int, ...]

DEFAULT_EXPONENT_LIMIT = 64


def degrevlex_key(m: Monomial) -> tuple:
    """Sort key realising degrevlex: larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def compare_monomials(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    ka, kb = degrevlex_key(a), degrevlex_key(b)
    return (ka > kb) - (ka < kb)


monomial_sort_key = cmp_to_key(compare_monomials)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, k: int) -> list[Monomial]:
    """All monomials of total degree ``k``, in descending degrevlex order."""
    if nvars == 0:
        return [()] if k == 0 else []
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, i: int) -> None:
        if i == nvars - 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, i + 1)

    rec([], k, 0)
    out.sort(key=degrevlex_key, reverse=True)
    return out


@dataclass(frozen=True)
class VariableSet:
    """Ordered variable names; index 0 is the most significant variable."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise InputError("variable set must be nonempty")
        if len(set(self.names)) != len(self.names):
            raise InputError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*(\(\d+\))?", name):
                raise InputError(f"invalid variable name {name!r}")

    @classmethod
    def parse(cls, spec: str | Sequence[str]) -> "VariableSet":
        if isinstance(spec, str):
            spec = [s.strip() for s in spec.split(",")]
        return cls(tuple(spec))

    @classmethod
    def positional(cls, nvars: int) -> "VariableSet":
        return cls(tuple(f"x({i})" for i in range(nvars)))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None


class Polynomial:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), nvars: int = 0):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    # -- construction helpers ---------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        m = [0] * nvars
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls({tuple(m): c}, len(m))

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending monomial order."""
        return sorted(self._terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=degrevlex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        return self._raw({m: c / lc for m, c in self._terms.items()}, self.nvars)

    def degree(self) -> int:
        return degree_and_homogeneity(self)[0]

    def is_homogeneous(self) -> bool:
        return degree_and_homogeneity(self)[1]

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Polynomial.zero(self.nvars)
            return self._raw({m: c * other for m, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return self._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return self._raw(
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._terms.items()}, self.nvars
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------
    def derivative(self, i: int) -> "Polynomial":
        return partial_derivative(self, i)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def to_str(self, vars: VariableSet | None = None) -> str:
        return format_polynomial(self, vars)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, nvars={self.nvars})"


def poly_arith(a: Polynomial, b: Polynomial, kind: str) -> Polynomial:
    a._check(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for m, c in f._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(out, f.nvars)


def jacobian(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, i) for i in range(f.nvars)]


def degree_and_homogeneity(f: Polynomial) -> tuple[int, bool]:
    if f.is_zero():
        raise ValueError("degree of the zero polynomial is undefined")
    degs = {sum(m) for m in f._terms}
    return max(degs), len(degs) == 1


def _determinant(matrix: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] / a[col][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def apply_linear_substitution(f: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    """Return ``f(M x)``, i.e. substitute ``x_i -> sum_j M[i][j] x_j``."""
    n = f.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    if _determinant(matrix) == 0:
        raise ValueError("substitution matrix is singular")
    images = [
        Polynomial({tuple(int(j == k) for k in range(n)): matrix[i][j] for j in range(n)}, n)
        for i in range(n)
    ]
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, n), 1: images[i]} for i in range(n)]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = Polynomial.zero(n)
    for m, c in f._terms.items():
        term = Polynomial.constant(c, n)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def dehomogenize(f: Polynomial, i: int) -> Polynomial:
    """Set variable ``i`` to 1; the result lives in the remaining variables."""
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    if not f.is_zero() and not f.is_homogeneous():
        raise ValueError("dehomogenize expects a homogeneous polynomial")
    out: dict[Monomial, Fraction] = {}
    for m, c in f._terms.items():
        k = m[:i] + m[i + 1:]
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return Polynomial._raw(out, f.nvars - 1)


# -- printing ---------------------------------------------------------------

def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial, vars: VariableSet | None = None) -> str:
    if vars is None:
        vars = VariableSet.positional(f.nvars)
    if len(vars) != f.nvars:
        raise ValueError("variable set does not match polynomial")
    if f.is_zero():
        return "0"
    parts = []
    for m, c in f.items():
        factors = []
        for name, e in zip(vars.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coefficient(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<pos>[A-Za-z_][A-Za-z0-9_]*\(\s*\d+\s*\))|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class _Parser:
    def __init__(self, src: str, vars: VariableSet, exponent_limit: int):
        self.src = src
        self.vars = vars
        self.nvars = len(vars)
        self.limit = exponent_limit
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(src) and src[pos].isspace():
                pos += 1
            if pos >= len(src):
                break
            m = _TOKEN.match(src, pos)
            if not m:
                raise InputError(f"unexpected character {src[pos]!r}", position=pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.tokens.append(("end", "", len(src)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, pos = self.take()
        if text != value or kind != "op":
            raise InputError(f"expected {value!r}, found {text or 'end of input'!r}", position=pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise InputError(f"unexpected token {text!r}", position=pos)
        return p

    def expr(self) -> Polynomial:
        neg = False
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if text == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Polynomial:
        neg = False
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            neg = True
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return -acc if neg else acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "num":
                raise InputError("exponent must be a non-negative integer literal", position=pos)
            e = int(text)
            if e > self.limit:
                raise InputError(f"exponent {e} exceeds limit {self.limit}", position=pos)
            base = base ** e
        return base

    def base(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "num":
            value = Fraction(int(text))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, t2, p2 = self.take()
                if k2 != "num":
                    raise InputError("denominator must be a natural number", position=p2)
                if int(t2) == 0:
                    raise InputError("zero denominator", position=p2)
                value /= int(t2)
            return Polynomial.constant(value, self.nvars)
        if kind == "pos":
            name = re.sub(r"\s+", "", text)
            if name in self.vars.names:
                return Polynomial.variable(self.vars.index(name), self.nvars)
            idx = int(name[name.index("(") + 1:-1])
            if not 0 <= idx < self.nvars:
                raise InputError(f"unknown variable {name!r}", position=pos)
            return Polynomial.variable(idx, self.nvars)
        if kind == "name":
            if text not in self.vars.names:
                raise InputError(f"unknown variable {text!r}", position=pos)
            return Polynomial.variable(self.vars.index(text), self.nvars)
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise InputError(f"unexpected token {text or 'end of input'!r}", position=pos)


def parse_polynomial(
    src: str, vars: VariableSet | str | Sequence[str], exponent_limit: int = DEFAULT_EXPONENT_LIMIT
) -> Polynomial:
    """Parse ``src`` into an expanded polynomial.

    Multiplication must be written explicitly with ``*``.  Variables may be
    referred to by name or positionally as ``x(i)``.
    """
    if not isinstance(vars, VariableSet):
        vars = VariableSet.parse(vars)
    return _Parser(src, vars, exponent_limit).parse()


def infer_positional_vars(src: str) -> VariableSet:
    """Variable set ``x(0)..x(n)`` where ``n`` is the largest index used in ``src``."""
    idx = [int(k) for k in re.findall(r"\bx\(\s*(\d+)\s*\)", src)]
    if not idx:
        raise InputError("no positional variables x(i) found; pass an explicit variable list")
    return VariableSet.positional(max(idx) + 1)
