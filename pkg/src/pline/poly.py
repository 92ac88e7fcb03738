"""Exact polynomials over prime fields GF(p).

Univariate polynomials (:class:`Poly`) are dense coefficient tuples in
ascending degree, trailing zeros stripped, so the zero polynomial is the
empty tuple.  Bivariate polynomials (:class:`BiPoly`) are sparse maps from
exponent pairs to nonzero coefficients.

Both types are immutable and hashable; arithmetic between polynomials over
different primes raises ``TypeError``.
"""

from __future__ import annotations

import math
import re
from itertools import zip_longest

from pline.errors import DomainError, SpecError

NEG_INF = -math.inf


def _check_prime(p: int) -> int:
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise SpecError(f"polynomial coefficients need a prime modulus, got {p}")
    return p


def _strip(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Univariate polynomial over GF(p), in the indeterminate ``X``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        self.p = p
        self.coeffs = _strip(int(c) % p for c in coeffs)

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c,))

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> Poly:
        return cls(p, (0,) * k + (c,))

    @classmethod
    def parse(cls, text: str, p: int) -> Poly:
        terms = parse_terms(text, ("X",), p)
        if not terms:
            return cls(p)
        top = max(e for (e,) in terms)
        coeffs = [0] * (top + 1)
        for (e,), c in terms.items():
            coeffs[e] = c
        return cls(p, coeffs)

    # -- structure ---------------------------------------------------------

    @property
    def deg(self) -> int | float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> Poly:
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit of GF({self.p})[X]")
        return Poly(self.p, (pow(self.coeffs[0], -1, self.p),))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise TypeError(f"mixing GF({self.p})[X] and GF({other.p})[X]")
            return other
        if isinstance(other, int):
            return Poly(self.p, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.p, (a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Poly(self.p, (1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly(self.p, (other,))
        return isinstance(other, Poly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return format_terms({(e,): c for e, c in enumerate(self.coeffs) if c}, ("X",))


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``num = den*q + r`` with ``deg r < deg den``."""
    if not isinstance(den, Poly) or den.p != num.p:
        raise TypeError("poly_divmod needs two polynomials over the same prime field")
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = num.p
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    if len(rem) - 1 < dd:
        return Poly(p), num
    inv_lead = pow(den.lead, -1, p)
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] * inv_lead % p
        if c:
            quot[k - dd] = c
            for j, b in enumerate(den.coeffs):
                rem[k - dd + j] = (rem[k - dd + j] - c * b) % p
    return Poly(p, quot), Poly(p, rem[:dd])


class BiPoly:
    """Sparse bivariate polynomial over GF(p) in ``X1``, ``X2``."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms=None):
        self.p = p
        clean = {}
        for exps, c in (terms or {}).items():
            c %= p
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def const(cls, p: int, c: int) -> BiPoly:
        return cls(p, {(0, 0): c})

    @classmethod
    def var(cls, p: int, which: int) -> BiPoly:
        return cls(p, {(1, 0) if which == 1 else (0, 1): 1})

    @classmethod
    def parse(cls, text: str, p: int) -> BiPoly:
        return cls(p, parse_terms(text, ("X1", "X2"), p))

    @property
    def deg(self) -> int | float:
        return max((i + j for i, j in self.terms), default=NEG_INF)

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and (0, 0) in self.terms

    def inverse(self) -> BiPoly:
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit of GF({self.p})[X1,X2]")
        return BiPoly(self.p, {(0, 0): pow(self.terms[(0, 0)], -1, self.p)})

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.p != self.p:
                raise TypeError(f"mixing GF({self.p})[X1,X2] and GF({other.p})[X1,X2]")
            return other
        if isinstance(other, int):
            return BiPoly.const(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(self.p, out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly(self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(self.p, other)
        return isinstance(other, BiPoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("BiPoly", self.p, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"BiPoly({self.p}, {dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        return format_terms(self.terms, ("X1", "X2"))


# -- text syntax: "1+X^2", "3*X1*X2^2 - 2", "2X" ------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^)|(\*)|([+-]))")


def parse_terms(text: str, variables: tuple[str, ...], p: int) -> dict[tuple[int, ...], int]:
    """Parse a sum of monomials into ``{exponents: coefficient mod p}``.

    Accepted syntax: integers, the given variable names (case-insensitive),
    ``^`` for powers, ``*`` or juxtaposition for products, ``+``/``-``
    between terms.  No parentheses.
    """
    names = {v.lower(): i for i, v in enumerate(variables)}
    if len(variables) == 1:
        names.setdefault("x1", 0)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecError(f"cannot parse polynomial {text!r} at position {pos}")
        tokens.append(m.groups())
        pos = m.end()
    if not tokens:
        raise SpecError("empty polynomial string")

    terms: dict[tuple[int, ...], int] = {}
    sign, coeff, exps, seen = 1, 1, [0] * len(variables), False
    i = 0

    def flush():
        key = tuple(exps)
        terms[key] = (terms.get(key, 0) + sign * coeff) % p

    while i < len(tokens):
        num, name, caret, star, op = tokens[i]
        if op:
            if seen:
                flush()
            elif i > 0:
                raise SpecError(f"dangling operator in {text!r}")
            sign = -1 if op == "-" else 1
            coeff, exps, seen = 1, [0] * len(variables), False
        elif num:
            coeff *= int(num)
            seen = True
        elif name:
            key = name.lower()
            if key not in names:
                raise SpecError(f"unknown variable {name!r}; expected one of {variables}")
            power = 1
            if i + 1 < len(tokens) and tokens[i + 1][2]:
                if i + 2 >= len(tokens) or not tokens[i + 2][0]:
                    raise SpecError(f"'^' must be followed by an integer in {text!r}")
                power = int(tokens[i + 2][0])
                i += 2
            exps[names[key]] += power
            seen = True
        elif caret:
            raise SpecError(f"misplaced '^' in {text!r}")
        # '*' is a no-op separator
        i += 1
    if not seen:
        raise SpecError(f"trailing operator in {text!r}")
    flush()
    return {k: c for k, c in terms.items() if c}


def format_terms(terms: dict[tuple[int, ...], int], variables: tuple[str, ...]) -> str:
    if not terms:
        return "0"
    parts = []
    for exps in sorted(terms, key=lambda e: (-sum(e), [-x for x in e])):
        c = terms[exps]
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}{mono}" if len(variables) == 1 else f"{c}*{mono}")
    return "+".join(parts)
