"""Matrix groups inside GL2(R) for finite rings: E2, GE2, stabilisers, the GE2-ring test."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from pline import kernels
from pline.errors import BudgetError, CapabilityError, DomainError, PreconditionError
from pline.mat2 import Mat2, gen_diag, gen_E, identity, mat_invertible
from pline.projective import DistantGraph, Point, base_point, build_graph, projective_line
from pline.rings import FiniteRing, Ring


@dataclass(frozen=True)
class Budget:
    """Resource caps: ring size for GL2 enumeration and order for group closure."""

    ring_size: int = 16
    group_order: int = 10**6

    @classmethod
    def from_env(cls) -> Budget:
        """Read ``PLINE_BUDGET``, e.g. ``"ring_size=32,group_order=5000000"``."""
        raw = os.environ.get("PLINE_BUDGET", "").strip()
        if not raw:
            return cls()
        values = {}
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in ("ring_size", "group_order"):
                raise ValueError(f"unknown PLINE_BUDGET key {key!r}")
            values[key] = int(val)
        return cls(**values)


def _budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget.from_env()


def _finite(r: Ring) -> FiniteRing:
    if not isinstance(r, FiniteRing):
        raise CapabilityError(f"{r} is infinite; group computations need a finite ring")
    return r


class MatrixGroup:
    """A finite subgroup of GL2(R), stored as a sorted array of matrix codes."""

    def __init__(self, ring: FiniteRing, codes: Iterable[int], generators: tuple[Mat2, ...] = ()):
        self.ring = ring
        self.codes = np.unique(np.asarray(list(codes) if not isinstance(codes, np.ndarray) else codes, dtype=np.int64))
        self.generators = tuple(generators)
        self._set = frozenset(int(c) for c in self.codes)

    @property
    def order(self) -> int:
        return len(self.codes)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, m: Mat2) -> bool:
        return m.ring == self.ring and m.code in self._set

    def __iter__(self):
        return self.matrices()

    def matrices(self):
        for c in self.codes:
            yield Mat2.from_code(self.ring, c)

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixGroup) and other.ring == self.ring and self._set == other._set

    def __le__(self, other: MatrixGroup) -> bool:
        return self._set <= other._set

    def __hash__(self) -> int:
        return hash((self.ring, self._set))

    def __repr__(self) -> str:
        return f"<MatrixGroup of order {self.order} over {self.ring}>"

    def verify_closed(self) -> bool:
        """Contains the identity and all inverses, and is closed under its generators."""
        if identity(self.ring) not in self:
            return False
        gens = np.array([g.entries for g in self.generators], dtype=np.int64).reshape(-1, 4)
        if len(gens) and not np.isin(_multiply_codes(self.ring, self.codes, gens), self.codes).all():
            return False
        return bool(np.isin(_inverse_codes(self.ring, self.codes), self.codes).all())


def _decode(n: int, codes: np.ndarray):
    return codes % n, codes // n % n, codes // n**2 % n, codes // n**3


def _product(r: FiniteRing, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise (broadcasting) product of matrix codes ``x * y``."""
    t = r.tables
    n = r.size
    add, mul = t.add, t.mul
    a, b, c, d = _decode(n, x)
    e, f, g, h = _decode(n, y)
    return (
        add[mul[a, e], mul[b, g]]
        + n * add[mul[a, f], mul[b, h]]
        + n**2 * add[mul[c, e], mul[d, g]]
        + n**3 * add[mul[c, f], mul[d, h]]
    )


def _encode(n: int, mats: np.ndarray) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64).reshape(-1, 4)
    return mats[:, 0] + n * mats[:, 1] + n**2 * mats[:, 2] + n**3 * mats[:, 3]


def _multiply_codes(r: FiniteRing, codes: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Codes of ``M * G`` for every code ``M`` and generator row ``G``."""
    g = _encode(r.size, gens)
    return _product(r, np.asarray(codes)[None, :], g[:, None]).ravel()


def _inverse_codes(r: FiniteRing, codes: np.ndarray) -> np.ndarray:
    """Inverses of elements of a finite group, as ``g^(k-1)`` where ``g^k = 1``."""
    ident = identity(r).code
    codes = np.asarray(codes, dtype=np.int64)
    inv = np.where(codes == ident, ident, -1)
    prev, power = codes, _product(r, codes, codes)
    for _ in range(len(codes) + 1):
        hit = (power == ident) & (inv < 0)
        inv[hit] = prev[hit]
        if (inv >= 0).all():
            break
        prev, power = power, _product(r, power, codes)
    return inv


def gl2_enumerate(r: Ring, budget: Budget | None = None) -> list[Mat2]:
    """Every invertible 2x2 matrix over a finite ring."""
    F = _finite(r)
    return [Mat2.from_code(F, c) for c in gl2_codes(F, budget)]


def gl2_codes(r: FiniteRing, budget: Budget | None = None) -> np.ndarray:
    b = _budget(budget)
    if r.size > b.ring_size:
        raise BudgetError("ring_size", b.ring_size, r.size)
    return _gl2_cached(r)


_GL2_CACHE: dict = {}


def _gl2_cached(r: FiniteRing) -> np.ndarray:
    if r not in _GL2_CACHE:
        t = r.tables
        codes = kernels.backend.gl2_codes(t.add, t.mul, t.neg, t.unit, t.commutative)
        codes.setflags(write=False)
        _GL2_CACHE[r] = codes
    return _GL2_CACHE[r]


def gl2_group(r: Ring, budget: Budget | None = None) -> MatrixGroup:
    F = _finite(r)
    return MatrixGroup(F, gl2_codes(F, budget))


def generate_group(gens: Iterable[Mat2], ring: Ring | None = None, budget: Budget | None = None) -> MatrixGroup:
    """Closure of the identity under right multiplication by ``gens``.

    In a finite group this closure is the generated subgroup, so inverses
    never need to be added.
    """
    gens = tuple(gens)
    if ring is None:
        if not gens:
            raise PreconditionError("pass ring= when generating from an empty list")
        ring = gens[0].ring
    F = _finite(ring)
    for g in gens:
        if g.ring != F:
            raise PreconditionError(f"generator {g} is not over {F}")
        if not mat_invertible(g):
            raise DomainError(f"generator {g} is not invertible")
    b = _budget(budget)
    t = F.tables
    arr = np.array([g.entries for g in gens], dtype=np.int64).reshape(-1, 4)
    try:
        try:
            codes = kernels.backend.group_closure(t.add, t.mul, arr, b.group_order)
        except ValueError:  # compiled closure refuses very large rings
            codes = kernels.python_backend.group_closure(t.add, t.mul, arr, b.group_order)
    except OverflowError as exc:
        raise BudgetError("group_order", b.group_order, exc.args[0] if exc.args else None) from None
    return MatrixGroup(F, codes, gens)


def e2_generators(r: FiniteRing) -> list[Mat2]:
    return [gen_E(r, t) for t in r.elements()]


def ge2_generators(r: FiniteRing) -> list[Mat2]:
    us = r.units()
    return e2_generators(r) + [gen_diag(r, u, v) for u in us for v in us]


def e2_group(r: Ring, budget: Budget | None = None) -> MatrixGroup:
    F = _finite(r)
    return generate_group(e2_generators(F), F, budget)


def ge2_group(r: Ring, budget: Budget | None = None) -> MatrixGroup:
    F = _finite(r)
    return generate_group(ge2_generators(F), F, budget)


def e2_point_orbit(r: Ring) -> set[Point]:
    """Closure of ``{R(1,0)}`` under ``p -> p * E(t)`` for all ``t``."""
    F = _finite(r)
    line = projective_line(F)
    n = F.size
    gens = np.array([gen_E(F, t).entries for t in F.elements()], dtype=np.int64)
    t = F.tables
    start = line.index(base_point(F))
    seen = {start}
    frontier = [start]
    pairs = line.pairs_array()
    while frontier:
        images = kernels.backend.act_on_pairs(t.add, t.mul, pairs[frontier], gens)
        nxt = set(int(line.pair_to_point[c]) for c in images.ravel()) - seen
        seen |= nxt
        frontier = sorted(nxt)
    return {line.points[i] for i in seen}


def stabilizer_of_component(r: Ring, g: DistantGraph | None = None, budget: Budget | None = None) -> MatrixGroup:
    """All ``G`` in GL2(R) mapping the component of ``R(1,0)`` onto itself."""
    F = _finite(r)
    g = g if g is not None else build_graph(F)
    line = g.line
    home = g.component_of(base_point(F))
    members = np.flatnonzero(g.component == home)
    codes = gl2_codes(F, budget)
    mats = np.stack(_decode(F.size, codes), axis=1)
    t = F.tables
    images = kernels.backend.act_on_pairs(t.add, t.mul, line.pairs_array()[members], mats)
    image_points = line.pair_to_point[images]
    keep = np.isin(image_points, members).all(axis=1)
    return MatrixGroup(F, codes[keep])


@dataclass(frozen=True)
class GE2Result:
    ring: str
    is_ge2: bool
    gl2_order: int
    ge2_order: int
    e2_order: int
    witness: Mat2 | None = None

    def __bool__(self) -> bool:
        return self.is_ge2

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "is_ge2": self.is_ge2,
            "gl2_order": self.gl2_order,
            "ge2_order": self.ge2_order,
            "e2_order": self.e2_order,
            "coset_count": self.gl2_order // self.ge2_order,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


def is_ge2_ring(r: Ring, budget: Budget | None = None) -> GE2Result:
    """Decide ``GE2(R) == GL2(R)`` by comparing the two sets; give a witness when they differ."""
    F = _finite(r)
    gl2 = gl2_group(F, budget)
    ge2 = ge2_group(F, budget)
    e2 = e2_group(F, budget)
    missing = np.setdiff1d(gl2.codes, ge2.codes)
    witness = Mat2.from_code(F, missing[0]) if len(missing) else None
    return GE2Result(F.name, len(missing) == 0, gl2.order, ge2.order, e2.order, witness)


def right_coset_count(group: MatrixGroup, sub: MatrixGroup) -> int:
    """Number of right cosets ``H*g`` of ``sub`` in ``group``, by explicit partition."""
    F = group.ring
    remaining = set(int(c) for c in group.codes)
    count = 0
    while remaining:
        g = min(remaining)
        remaining -= set(int(c) for c in _product(F, sub.codes, np.int64(g)))
        count += 1
    return count
