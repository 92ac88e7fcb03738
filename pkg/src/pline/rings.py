"""Ring abstraction and the concrete rings pline works over.

Finite rings number their elements densely ``0..|R|-1`` and do all arithmetic
on those indices; index 0 is zero and index 1 is one (unless ``1 == 0``).
Structured rings (quotients, matrix rings, products) enumerate their element
tuples in mixed radix over the base indices, then swap the identity into
slot 1.  Rings of at most ``TABLE_LIMIT`` elements precompute addition and
multiplication tables at construction; the numeric kernels consume those
tables directly.

The only infinite rings are the polynomial rings GF(p)[X] and GF(p)[X1,X2],
whose elements are :class:`~pline.poly.Poly` / :class:`~pline.poly.BiPoly`.
"""

from __future__ import annotations

import functools
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

import numpy as np

from pline.errors import CapabilityError, DomainError, SpecError
from pline.poly import BiPoly, Poly

TABLE_LIMIT = 256
LAZY_TABLE_LIMIT = 1024


# -- specs ---------------------------------------------------------------------


@dataclass(frozen=True)
class ZnSpec:
    n: int


@dataclass(frozen=True)
class QuotientPolySpec:
    base: RingSpec
    modulus: tuple  # ascending coefficients, as base-ring JSON values


@dataclass(frozen=True)
class MatrixSpec:
    base: RingSpec
    dim: int = 2


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple


@dataclass(frozen=True)
class PolySpec:
    base: RingSpec
    vars: int = 1


RingSpec = Union[ZnSpec, QuotientPolySpec, MatrixSpec, ProductSpec, PolySpec]


def _freeze(v):
    if isinstance(v, list):
        return tuple(_freeze(x) for x in v)
    return v


def _thaw(v):
    if isinstance(v, tuple):
        return [_thaw(x) for x in v]
    return v


def spec_from_json(obj: Any) -> RingSpec:
    """Build a :data:`RingSpec` from its JSON form (``{"type": "Zn", "n": 4}`` etc.)."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise SpecError(f"ring spec must be an object with a 'type' key, got {obj!r}")
    kind = str(obj["type"]).lower()
    try:
        if kind == "zn":
            return ZnSpec(int(obj["n"]))
        if kind == "quotientpoly":
            return QuotientPolySpec(spec_from_json(obj["base"]), _freeze(list(obj["modulus"])))
        if kind == "matrix":
            return MatrixSpec(spec_from_json(obj["base"]), int(obj.get("dim", 2)))
        if kind == "product":
            return ProductSpec(tuple(spec_from_json(f) for f in obj["factors"]))
        if kind == "poly":
            return PolySpec(spec_from_json(obj["base"]), int(obj.get("vars", 1)))
    except KeyError as exc:
        raise SpecError(f"ring spec {obj!r} is missing field {exc}") from None
    raise SpecError(f"unknown ring type {obj['type']!r}")


def spec_to_json(spec: RingSpec) -> dict:
    if isinstance(spec, ZnSpec):
        return {"type": "Zn", "n": spec.n}
    if isinstance(spec, QuotientPolySpec):
        return {"type": "quotientpoly", "base": spec_to_json(spec.base), "modulus": _thaw(spec.modulus)}
    if isinstance(spec, MatrixSpec):
        return {"type": "matrix", "base": spec_to_json(spec.base), "dim": spec.dim}
    if isinstance(spec, ProductSpec):
        return {"type": "product", "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, PolySpec):
        return {"type": "poly", "base": spec_to_json(spec.base), "vars": spec.vars}
    raise SpecError(f"not a ring spec: {spec!r}")


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, m = 0, q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                break
            return p, k
    raise SpecError(f"{q} is not a prime power")


def _first_irreducible(p: int, k: int) -> list[int]:
    # lexicographically first monic irreducible of degree k, by trial division
    def irreducible(f: Poly) -> bool:
        for d in range(1, k // 2 + 1):
            for tail in range(p**d):
                g = Poly(p, [tail // p**i % p for i in range(d)] + [1])
                if (f % g).is_zero():
                    return False
        return True

    for tail in range(p**k):
        coeffs = [tail // p**i % p for i in range(k)] + [1]
        if irreducible(Poly(p, coeffs)):
            return coeffs
    raise SpecError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


def parse_ring_arg(text: str) -> RingSpec:
    """Parse a ring given on the command line.

    Accepts inline JSON, a path to a JSON file, or a shorthand:
    ``Z/n`` or ``Zn``, ``Fp``, ``GF(q)``, ``Fp[e]`` (dual numbers),
    ``Fp[X]``, ``Fp[X1,X2]``, ``M2(<ring>)``, and ``<ring> x <ring>``.
    """
    text = text.strip()
    if text.startswith("{"):
        return spec_from_json(json.loads(text))
    path = Path(text)
    if text.endswith(".json") and path.exists():
        return spec_from_json(json.loads(path.read_text()))
    return _parse_shorthand(text)


def _parse_shorthand(text: str) -> RingSpec:
    text = text.replace(" ", "")
    # products bind loosest; split on top-level 'x'
    depth, parts, start = 0, [], 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "x" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if parts:
        parts.append(text[start:])
        return ProductSpec(tuple(_parse_shorthand(p) for p in parts))
    if m := re.fullmatch(r"Z/?(\d+)", text):
        return ZnSpec(int(m.group(1)))
    if m := re.fullmatch(r"(?:F|GF\(?)(\d+)\)?", text):
        q = int(m.group(1))
        p, k = _prime_power(q)
        if k == 1:
            return ZnSpec(p)
        return QuotientPolySpec(ZnSpec(p), tuple(_first_irreducible(p, k)))
    if m := re.fullmatch(r"F(\d+)\[e\]", text):
        return QuotientPolySpec(_parse_shorthand(f"F{m.group(1)}"), (0, 0, 1))
    if m := re.fullmatch(r"F(\d+)\[X\]", text, flags=re.IGNORECASE):
        return PolySpec(ZnSpec(int(m.group(1))), 1)
    if m := re.fullmatch(r"F(\d+)\[X1,X2\]", text, flags=re.IGNORECASE):
        return PolySpec(ZnSpec(int(m.group(1))), 2)
    if m := re.fullmatch(r"M2\((.+)\)", text):
        return MatrixSpec(_parse_shorthand(m.group(1)), 2)
    raise SpecError(f"cannot parse ring {text!r}")


# -- ring objects --------------------------------------------------------------


class Elem:
    """Convenience wrapper tying a raw element value to its ring.

    Arithmetic is delegated to the ring.  Elements of different rings never
    compare equal, even when their raw values coincide.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise DomainError(f"elements of {self.ring} and {other.ring} cannot be combined")
            return other.value
        return self.ring.from_json(other)

    def __add__(self, other):
        return Elem(self.ring, self.ring.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Elem(self.ring, self.ring.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Elem(self.ring, self.ring.mul(self.value, self._other(other)))

    def __rmul__(self, other):
        return Elem(self.ring, self.ring.mul(self._other(other), self.value))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> Elem:
        return Elem(self.ring, self.ring.unit_inverse(self.value))

    def __eq__(self, other) -> bool:
        return isinstance(other, Elem) and other.ring == self.ring and self.ring.equal(self.value, other.value)

    def __hash__(self) -> int:
        return hash((self.ring.spec, self.value))

    def __repr__(self) -> str:
        return f"{self.ring.fmt(self.value)} in {self.ring}"


class Ring:
    """Common interface of every ring; elements are raw values (ints or polynomials)."""

    spec: RingSpec
    finite: bool = True
    commutative: bool = True
    stable_rank_two: bool = False
    zero: Any
    one: Any

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def equal(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def unit_inverse(self, a):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def from_json(self, v):
        raise NotImplementedError

    def to_json(self, a):
        raise NotImplementedError

    def __call__(self, v) -> Elem:
        return Elem(self, self.from_json(v))

    def units(self) -> list:
        raise CapabilityError(f"{self} is infinite; its units cannot be listed")

    def elements(self):
        raise CapabilityError(f"{self} is infinite and cannot be enumerated")

    @property
    def trivial(self) -> bool:
        return self.equal(self.zero, self.one)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"

    def __str__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        return spec_name(self.spec)


def spec_name(spec: RingSpec) -> str:
    if isinstance(spec, ZnSpec):
        return f"Z/{spec.n}"
    if isinstance(spec, QuotientPolySpec):
        return f"{spec_name(spec.base)}[x]/({_modulus_str(spec.modulus)})"
    if isinstance(spec, MatrixSpec):
        return f"M{spec.dim}({spec_name(spec.base)})"
    if isinstance(spec, ProductSpec):
        return " x ".join(spec_name(f) for f in spec.factors)
    if isinstance(spec, PolySpec):
        v = "X" if spec.vars == 1 else "X1,X2"
        return f"{spec_name(spec.base)}[{v}]"
    return repr(spec)


def _modulus_str(mod: tuple) -> str:
    terms = []
    for k in range(len(mod) - 1, -1, -1):
        c = mod[k]
        if c in (0, (), None):
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        coeff = "" if (c == 1 and mono) else str(_thaw(c))
        terms.append(coeff + mono)
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class RingTables:
    """Dense operation tables of a finite ring (int64 arrays)."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    unit: np.ndarray  # uint8 mask
    inv: np.ndarray  # two-sided inverse index, -1 for non-units
    commutative: bool

    @property
    def size(self) -> int:
        return len(self.neg)


class FiniteRing(Ring):
    """A finite ring whose elements are the indices ``0..size-1``."""

    finite = True
    size: int
    zero = 0
    one = 1

    def __init__(self):
        self._tables: RingTables | None = None
        if self.size <= TABLE_LIMIT:
            self._tables = self._build_tables()
        if self.size == 1:
            self.one = 0

    # value-level hooks used to build tables and for large rings
    def _add_raw(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _mul_raw(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _neg_raw(self, a: int) -> int:
        raise NotImplementedError

    def _build_tables(self) -> RingTables:
        n = self.size
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                add[a, b] = self._add_raw(a, b)
                mul[a, b] = self._mul_raw(a, b)
        neg = np.array([self._neg_raw(a) for a in range(n)], dtype=np.int64)
        return _finish_tables(add, mul, neg, self.commutative)

    @property
    def tables(self) -> RingTables:
        if self._tables is None:
            if self.size > LAZY_TABLE_LIMIT:
                raise CapabilityError(
                    f"{self} has {self.size} elements; table-driven routines support at most {LAZY_TABLE_LIMIT}"
                )
            self._tables = self._build_tables()
        return self._tables

    def add(self, a: int, b: int) -> int:
        t = self._tables
        return int(t.add[a, b]) if t is not None else self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        t = self._tables
        return int(t.mul[a, b]) if t is not None else self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        t = self._tables
        return int(t.neg[a]) if t is not None else self._neg_raw(a)

    def is_unit(self, a: int) -> bool:
        self._check(a)
        return bool(self.tables.unit[a])

    def unit_inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise DomainError(f"{self.fmt(a)} is not a unit of {self}")
        return int(self.tables.inv[a])

    def units(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.tables.unit)]

    def elements(self) -> range:
        return range(self.size)

    def _check(self, a) -> None:
        if not (isinstance(a, (int, np.integer)) and 0 <= a < self.size):
            raise DomainError(f"{a!r} is not an element index of {self}")


def _finish_tables(add, mul, neg, commutative: bool) -> RingTables:
    n = len(neg)
    one = 1 if n > 1 else 0
    both = (mul == one) & (mul.T == one)
    unit = both.any(axis=1).astype(np.uint8)
    inv = np.where(unit.astype(bool), both.argmax(axis=1), -1).astype(np.int64)
    for arr in (add, mul, neg, unit, inv):
        arr.setflags(write=False)
    return RingTables(add, mul, neg, unit, inv, commutative)


class ZnRing(FiniteRing):
    """Residues modulo n; the element index is the residue itself."""

    def __init__(self, spec: ZnSpec):
        if spec.n < 1:
            raise SpecError(f"Zn needs n >= 1, got {spec.n}")
        self.spec = spec
        self.n = self.size = spec.n
        self.commutative = True
        self.stable_rank_two = True
        super().__init__()

    def _build_tables(self) -> RingTables:
        r = np.arange(self.n, dtype=np.int64)
        add = np.add.outer(r, r) % self.n
        mul = np.multiply.outer(r, r) % self.n
        return _finish_tables(add, mul, (-r) % self.n, True)

    def _add_raw(self, a, b):
        return (a + b) % self.n

    def _mul_raw(self, a, b):
        return (a * b) % self.n

    def _neg_raw(self, a):
        return (-a) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_unit(self, a) -> bool:
        self._check(a)
        return math.gcd(a, self.n) == 1

    def unit_inverse(self, a) -> int:
        if not self.is_unit(a):
            raise DomainError(f"{a} is not a unit of {self}")
        return pow(a, -1, self.n) if self.n > 1 else 0

    def units(self) -> list[int]:
        return [a for a in range(self.n) if math.gcd(a, self.n) == 1]

    @property
    def is_field(self) -> bool:
        return _is_prime(self.n)

    def from_json(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise SpecError(f"element of {self} must be an integer, got {v!r}")
        return int(v) % self.n

    def to_json(self, a) -> int:
        return int(a)


class _TupleRing(FiniteRing):
    """Finite ring whose raw values are tuples of base indices, enumerated in mixed radix."""

    def _setup_index(self, values: list[tuple], one_value: tuple) -> None:
        one_pos = values.index(one_value)
        if len(values) > 1:
            values[1], values[one_pos] = values[one_pos], values[1]
        self._values = values
        self._index = {v: i for i, v in enumerate(values)}
        self.size = len(values)

    def value(self, a: int) -> tuple:
        return self._values[a]

    def index(self, v: tuple) -> int:
        return self._index[v]

    def _add_raw(self, a, b):
        return self._index[self._vadd(self._values[a], self._values[b])]

    def _mul_raw(self, a, b):
        return self._index[self._vmul(self._values[a], self._values[b])]

    def _neg_raw(self, a):
        return self._index[self._vneg(self._values[a])]


def _mixed_radix(q: int, k: int) -> list[tuple]:
    return [tuple(i // q**j % q for j in range(k)) for i in range(q**k)]


def _is_finite_field(r: FiniteRing) -> bool:
    return r.size > 1 and len(r.units()) == r.size - 1 and r.commutative


class QuotientPolyRing(_TupleRing):
    """``base[x]/(modulus)`` for a finite field ``base``; values are coefficient tuples."""

    def __init__(self, spec: QuotientPolySpec):
        base = ring_create(spec.base)
        if not isinstance(base, FiniteRing) or not _is_finite_field(base):
            raise SpecError(f"quotientpoly base must be a finite field, got {base}")
        if len(spec.modulus) < 2:
            raise SpecError("quotientpoly modulus must have degree >= 1")
        mod = [base.from_json(_thaw(c)) for c in spec.modulus]
        if not base.is_unit(mod[-1]):
            raise SpecError(f"quotientpoly modulus leading coefficient {spec.modulus[-1]!r} is not a unit")
        self.spec = spec
        self.base = base
        self.degree = k = len(mod) - 1
        inv_lead = base.unit_inverse(mod[-1])
        # x^k == -sum(c_i x^i) / lead
        self._reduction = [base.neg(base.mul(inv_lead, c)) for c in mod[:-1]]
        self.commutative = True
        self.stable_rank_two = True
        values = _mixed_radix(base.size, k)
        self._setup_index(values, (1,) + (0,) * (k - 1))
        super().__init__()

    def _vadd(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def _vneg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def _vmul(self, a, b):
        B = self.base
        k = self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i, r in enumerate(self._reduction):
                    prod[top - k + i] = B.add(prod[top - k + i], B.mul(c, r))
        return tuple(prod[:k])

    def fmt(self, a) -> str:
        terms = []
        for k, c in enumerate(self._values[a]):
            if c == 0:
                continue
            cs = self.base.fmt(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(cs if not mono else (mono if c == 1 else f"{cs}{mono}"))
        return "+".join(terms) or "0"

    def from_json(self, v) -> int:
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            v = [v]
        if not isinstance(v, (list, tuple)) or len(v) > self.degree:
            raise SpecError(f"element of {self} must be a coefficient list of length <= {self.degree}")
        coeffs = [self.base.from_json(c) for c in v] + [0] * (self.degree - len(v))
        return self._index[tuple(coeffs)]

    def to_json(self, a) -> list:
        return [self.base.to_json(c) for c in self._values[a]]


class MatrixRing(_TupleRing):
    """2x2 matrices over a finite base ring; values are ``(m11, m12, m21, m22)``."""

    def __init__(self, spec: MatrixSpec):
        if spec.dim != 2:
            raise SpecError(f"only 2x2 matrix rings are supported, got dim={spec.dim}")
        base = ring_create(spec.base)
        if not isinstance(base, FiniteRing):
            raise SpecError("matrix ring base must be finite")
        self.spec = spec
        self.base = base
        self.commutative = base.size == 1
        self.stable_rank_two = _is_finite_field(base)
        self._setup_index(_mixed_radix(base.size, 4), (base.one, base.zero, base.zero, base.one))
        super().__init__()

    def _vadd(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def _vneg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def _vmul(self, a, b):
        B = self.base
        a11, a12, a21, a22 = a
        b11, b12, b21, b22 = b
        return (
            B.add(B.mul(a11, b11), B.mul(a12, b21)),
            B.add(B.mul(a11, b12), B.mul(a12, b22)),
            B.add(B.mul(a21, b11), B.mul(a22, b21)),
            B.add(B.mul(a21, b12), B.mul(a22, b22)),
        )

    def fmt(self, a) -> str:
        m = [self.base.fmt(x) for x in self._values[a]]
        return f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]"

    def from_json(self, v) -> int:
        try:
            (a, b), (c, d) = v
        except (TypeError, ValueError):
            raise SpecError(f"element of {self} must be [[a,b],[c,d]], got {v!r}") from None
        return self._index[tuple(self.base.from_json(x) for x in (a, b, c, d))]

    def to_json(self, a) -> list:
        m = [self.base.to_json(x) for x in self._values[a]]
        return [m[:2], m[2:]]


class ProductRing(_TupleRing):
    """Direct product of finite rings; values are tuples of factor indices."""

    def __init__(self, spec: ProductSpec):
        if not spec.factors:
            raise SpecError("product ring needs at least one factor")
        factors = [ring_create(f) for f in spec.factors]
        if not all(isinstance(f, FiniteRing) for f in factors):
            raise SpecError("product factors must be finite rings")
        self.spec = spec
        self.factors = factors
        self.commutative = all(f.commutative for f in factors)
        self.stable_rank_two = all(f.stable_rank_two for f in factors)
        values = [()]
        for f in reversed(factors):
            values = [(x,) + rest for rest in values for x in range(f.size)]
        # mixed radix with the first factor as lowest digit
        values.sort(key=lambda v: tuple(reversed(v)))
        self._setup_index(values, tuple(f.one for f in factors))
        super().__init__()

    def _vadd(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def _vneg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def _vmul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def fmt(self, a) -> str:
        return "(" + ",".join(f.fmt(x) for f, x in zip(self.factors, self._values[a])) + ")"

    def from_json(self, v) -> int:
        if not isinstance(v, (list, tuple)) or len(v) != len(self.factors):
            raise SpecError(f"element of {self} must be a list of {len(self.factors)} components")
        return self._index[tuple(f.from_json(x) for f, x in zip(self.factors, v))]

    def to_json(self, a) -> list:
        return [f.to_json(x) for f, x in zip(self.factors, self._values[a])]


class PolyRing(Ring):
    """GF(p)[X] or GF(p)[X1,X2]: infinite, commutative, not enumerable."""

    finite = False
    commutative = True

    def __init__(self, spec: PolySpec):
        if not isinstance(spec.base, ZnSpec) or not _is_prime(spec.base.n):
            raise SpecError("poly rings are supported over prime fields Zn{p} only")
        if spec.vars not in (1, 2):
            raise SpecError(f"poly ring needs vars in (1, 2), got {spec.vars}")
        self.spec = spec
        self.p = spec.base.n
        self.nvars = spec.vars
        self._cls = Poly if spec.vars == 1 else BiPoly
        self.zero = self._cls.const(self.p, 0)
        self.one = self._cls.const(self.p, 1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return a.is_unit()

    def unit_inverse(self, a):
        return a.inverse()

    def const(self, c: int):
        return self._cls.const(self.p, c)

    def parse(self, text: str):
        return self._cls.parse(text, self.p)

    def from_json(self, v):
        if isinstance(v, (Poly, BiPoly)):
            return v
        if isinstance(v, int):
            return self.const(v)
        if isinstance(v, str):
            return self.parse(v)
        raise SpecError(f"element of {self} must be a polynomial string, got {v!r}")

    def to_json(self, a) -> str:
        return str(a)

    def elements(self):
        raise CapabilityError(f"{self} is infinite and cannot be enumerated")


@functools.lru_cache(maxsize=None)
def ring_create(spec: RingSpec) -> Ring:
    """Construct (and cache) the ring described by ``spec``."""
    if isinstance(spec, dict):
        raise SpecError("pass a RingSpec; use spec_from_json for JSON documents")
    if isinstance(spec, ZnSpec):
        return ZnRing(spec)
    if isinstance(spec, QuotientPolySpec):
        return QuotientPolyRing(spec)
    if isinstance(spec, MatrixSpec):
        return MatrixRing(spec)
    if isinstance(spec, ProductSpec):
        return ProductRing(spec)
    if isinstance(spec, PolySpec):
        return PolyRing(spec)
    raise SpecError(f"not a ring spec: {spec!r}")


def ring(text_or_spec) -> Ring:
    """Shortcut: ``ring("Z/4")``, ``ring({"type": "Zn", "n": 4})`` or ``ring(ZnSpec(4))``."""
    if isinstance(text_or_spec, str):
        return ring_create(parse_ring_arg(text_or_spec))
    if isinstance(text_or_spec, dict):
        return ring_create(spec_from_json(text_or_spec))
    return ring_create(text_or_spec)


def is_field(r: Ring) -> bool:
    return isinstance(r, FiniteRing) and _is_finite_field(r)


BUNDLED_RINGS = (
    "Z/1",
    "F2",
    "F3",
    "F4",
    "F5",
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/9",
    "F2[e]",
    "F3[e]",
    "F2 x F2",
    "M2(F2)",
)
