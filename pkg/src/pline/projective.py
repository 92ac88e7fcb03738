"""The projective line over a ring and its distant graph.

A point ``R(a, b)`` is stored through a canonical admissible pair: over a
finite ring the lexicographic minimum (by element index) of all left unit
multiples ``(u*a, u*b)``; over GF(p)[X] the pair scaled so that the leading
coefficient of its first nonzero entry is 1.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from pline import kernels
from pline.errors import CapabilityError, DomainError, PreconditionError
from pline.mat2 import Mat2, gen_E, identity, lemma_factor, mat_invertible
from pline.poly import Poly
from pline.rings import FiniteRing, PolyRing, Ring, spec_to_json


@dataclass(frozen=True)
class Point:
    """A point ``R(a, b)`` of the projective line, held in canonical form."""

    ring: Ring
    a: Any
    b: Any

    @property
    def pair(self) -> tuple:
        return (self.a, self.b)

    @property
    def label(self) -> str:
        return f"R({self.ring.fmt(self.a)},{self.ring.fmt(self.b)})"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> list:
        return [self.ring.to_json(self.a), self.ring.to_json(self.b)]

    def act(self, g: Mat2) -> Point:
        """Image ``R((a, b) * g)`` under an invertible matrix."""
        return _point_unchecked(self.ring, *g.row_action(self.a, self.b))


def _finite(r: Ring) -> FiniteRing:
    if not isinstance(r, FiniteRing):
        raise CapabilityError(f"{r} is infinite; this operation needs a finite ring")
    return r


# -- admissibility -------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _unimodular_mask(r: FiniteRing) -> np.ndarray:
    t = r.tables
    return kernels.backend.unimodular_mask(t.add, t.mul)


@functools.lru_cache(maxsize=None)
def _completion_mask(r: FiniteRing) -> np.ndarray:
    t = r.tables
    return kernels.backend.admissible_mask(t.add, t.mul, t.neg, t.unit, t.commutative)


def admissible_mask(r: FiniteRing) -> np.ndarray:
    """Flags over pair codes ``a + n*b``; uses the unimodularity shortcut where it is valid."""
    if r.commutative or r.stable_rank_two:
        return _unimodular_mask(r)
    return _completion_mask(r)


def is_admissible(r: Ring, a, b) -> bool:
    """Whether ``(a, b)`` is the first row of some invertible matrix."""
    if isinstance(r, PolyRing):
        if r.nvars != 1:
            raise CapabilityError(f"admissibility over {r} is not decidable here")
        return _poly_gcd(a, b).is_unit()
    F = _finite(r)
    F._check(a)
    F._check(b)
    return bool(admissible_mask(F)[a + F.size * b])


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a


def _canonical(r: Ring, a, b) -> tuple:
    if isinstance(r, FiniteRing):
        t = r.tables
        us = np.flatnonzero(t.unit)
        ua, ub = t.mul[us, a], t.mul[us, b]
        k = np.lexsort((ub, ua))[0]
        return int(ua[k]), int(ub[k])
    if isinstance(r, PolyRing):
        lead = a if not a.is_zero() else b
        if lead.is_zero():
            return a, b
        c = lead.lead if isinstance(lead, Poly) else lead.terms[max(lead.terms)]
        inv = r.const(pow(c, -1, r.p))
        return inv * a, inv * b
    raise CapabilityError(f"no canonical point form over {r}")


def _point_unchecked(r: Ring, a, b) -> Point:
    return Point(r, *_canonical(r, a, b))


def point_make(r: Ring, a, b) -> Point:
    """The point ``R(a, b)``; raises :class:`DomainError` for inadmissible pairs."""
    if not is_admissible(r, a, b):
        raise DomainError(f"({r.fmt(a)}, {r.fmt(b)}) is not admissible over {r}")
    return _point_unchecked(r, a, b)


def point_eq(p: Point, q: Point) -> bool:
    return p == q


def distant(p: Point, q: Point) -> bool:
    if p.ring != q.ring:
        raise DomainError(f"points over {p.ring} and {q.ring} cannot be compared")
    return mat_invertible(Mat2(p.ring, p.a, p.b, q.a, q.b))


# -- the finite projective line -----------------------------------------------


@dataclass
class ProjectiveLine:
    """All points of the projective line over a finite ring, with lookup tables."""

    ring: FiniteRing
    points: list[Point]
    pair_to_point: np.ndarray  # point index per pair code, -1 if inadmissible
    _index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self._index = {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def index(self, p: Point) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise DomainError(f"{p} is not a point of the projective line over {self.ring}") from None

    def pairs_array(self) -> np.ndarray:
        return np.array([p.pair for p in self.points], dtype=np.int64).reshape(-1, 2)


@functools.lru_cache(maxsize=None)
def projective_line(r: FiniteRing) -> ProjectiveLine:
    r = _finite(r)
    n = r.size
    mask = admissible_mask(r)
    canon = {}
    for code in np.flatnonzero(mask):
        a, b = int(code % n), int(code // n)
        canon[code] = _canonical(r, a, b)
    reps = sorted(set(canon.values()))
    where = {rep: i for i, rep in enumerate(reps)}
    pair_to_point = np.full(n * n, -1, dtype=np.int64)
    for code, rep in canon.items():
        pair_to_point[code] = where[rep]
    pair_to_point.setflags(write=False)
    return ProjectiveLine(r, [Point(r, a, b) for a, b in reps], pair_to_point)


def enumerate_points(r: Ring) -> list[Point]:
    """All points over a finite ring, canonical and in a fixed order."""
    return list(projective_line(_finite(r)).points)


# -- the distant graph ---------------------------------------------------------


class DistantGraph:
    """Distant graph of a finite projective line with BFS-derived metrics."""

    def __init__(self, line: ProjectiveLine):
        r = line.ring
        t = r.tables
        self.line = line
        self.ring = r
        self.points = line.points
        self.adjacency = kernels.backend.distant_matrix(
            t.add, t.mul, t.neg, t.unit, t.commutative, line.pairs_array()
        ).astype(bool)
        self.distances = kernels.backend.bfs_distances(self.adjacency.astype(np.uint8))
        reach = self.distances >= 0
        self.component = reach.argmax(axis=1)  # smallest reachable index labels the component
        labels = sorted(set(int(c) for c in self.component))
        self._comp_ids = {lab: k for k, lab in enumerate(labels)}
        self.component = np.array([self._comp_ids[int(c)] for c in self.component], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, p: Point) -> int:
        return self.line.index(p)

    def components(self) -> list[list[Point]]:
        comps: list[list[Point]] = [[] for _ in self._comp_ids]
        for p, c in zip(self.points, self.component):
            comps[c].append(p)
        return comps

    def component_of(self, p: Point) -> int:
        return int(self.component[self.index(p)])

    @property
    def n_components(self) -> int:
        return len(self._comp_ids)

    def is_connected(self) -> bool:
        return self.n_components == 1

    def dist(self, p: Point, q: Point) -> int | float:
        d = int(self.distances[self.index(p), self.index(q)])
        return math.inf if d < 0 else d

    def diameter(self, component: int = 0) -> int | float:
        """Largest distance between two points of one component (0 for a single point)."""
        members = np.flatnonzero(self.component == component)
        if len(members) == 0:
            raise DomainError(f"no component {component}")
        block = self.distances[np.ix_(members, members)]
        return int(block.max())

    def diameters(self) -> list:
        return [self.diameter(c) for c in range(self.n_components)]

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency))
        return [(int(a), int(b)) for a, b in zip(i, j)]

    def neighbours(self, p: Point) -> list[Point]:
        return [self.points[j] for j in np.flatnonzero(self.adjacency[self.index(p)])]

    def to_dot(self) -> str:
        lines = ["graph distant {"]
        for i, p in enumerate(self.points):
            lines.append(f'  {i} [label="{p.label}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "ring": spec_to_json(self.ring.spec),
            "points": [p.label for p in self.points],
            "edges": [list(e) for e in self.edges()],
            "components": [[int(i) for i in np.flatnonzero(self.component == c)] for c in range(self.n_components)],
            "diameters": self.diameters(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@functools.lru_cache(maxsize=None)
def build_graph(r: FiniteRing) -> DistantGraph:
    return DistantGraph(projective_line(_finite(r)))


def components(g: DistantGraph) -> list[list[Point]]:
    return g.components()


def dist(g: DistantGraph, p: Point, q: Point) -> int | float:
    return g.dist(p, q)


def diameter(g: DistantGraph, component: int = 0) -> int | float:
    return g.diameter(component)


# -- E(t)-words -----------------------------------------------------------------


def base_point(r: Ring) -> Point:
    """``R(1, 0)``."""
    return _point_unchecked(r, r.one, r.zero)


def word_matrix_trace(r: Ring, word: Sequence) -> list[Mat2]:
    """Matrices ``E(t_i) * ... * E(t_1)`` for ``i = 0..n``."""
    m = identity(r)
    out = [m]
    for t in word:
        m = gen_E(r, t) @ m
        out.append(m)
    return out


def word_to_point(r: Ring, word: Sequence) -> tuple[Point, list[Point]]:
    """The point ``R((1, 0) * E(t_n) * ... * E(t_1))`` and its prefix trace.

    ``word = (t_1, ..., t_n)``; the trace lists ``p_i = R(x_i, y_i)`` with
    ``(x_i, y_i)`` the first row of ``E(t_i) * ... * E(t_1)``, starting at
    ``p_0 = R(1, 0)``.  Consecutive trace points are distant.
    """
    trace = [_point_unchecked(r, m.a, m.b) for m in word_matrix_trace(r, word)]
    return trace[-1], trace


def chain_to_word(chain: Sequence[Point]) -> tuple:
    """Normalise a chain ``R(1,0) = p_0, p_1, ..., p_n`` of successively distant points into a word.

    Follows the recursion: starting from ``(x_-1, y_-1) = (0, -1)`` and
    ``(x_0, y_0) = (1, 0)``, each step factors
    ``[[x_{i-1}, y_{i-1}], [a_i, b_i]] = [[1, 0], [s_i, u_i]] * [[x_{i-1}, y_{i-1}], [-x_{i-2}, -y_{i-2}]]``
    and sets ``t_i = u_i^-1 s_i`` and ``(x_i, y_i) = u_i^-1 (a_i, b_i)``.
    """
    if not chain:
        raise PreconditionError("empty chain")
    r = chain[0].ring
    if chain[0] != base_point(r):
        raise PreconditionError(f"chain must start at R(1,0), got {chain[0]}")
    prev2 = (r.zero, r.neg(r.one))
    prev = (r.one, r.zero)
    word = []
    for i in range(1, len(chain)):
        p = chain[i]
        if p.ring != r:
            raise PreconditionError("chain mixes rings")
        if not distant(chain[i - 1], p):
            raise PreconditionError(f"chain points {i - 1} and {i} are not distant")
        x = Mat2(r, prev[0], prev[1], p.a, p.b)
        xp = Mat2(r, prev[0], prev[1], r.neg(prev2[0]), r.neg(prev2[1]))
        s, u = lemma_factor(x, xp)
        ui = r.unit_inverse(u)
        word.append(r.mul(ui, s))
        prev2, prev = prev, (r.mul(ui, p.a), r.mul(ui, p.b))
    return tuple(word)


# -- unimodular versus admissible ---------------------------------------------


@dataclass(frozen=True)
class UniAdmReport:
    ring: str
    pairs: int
    unimodular: int
    admissible: int
    unimodular_implies_admissible: bool
    admissible_implies_unimodular: bool
    counterexamples: tuple = ()

    @property
    def equivalent(self) -> bool:
        return self.unimodular_implies_admissible and self.admissible_implies_unimodular

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["counterexamples"] = [list(c) for c in self.counterexamples]
        d["equivalent"] = self.equivalent
        return d


def unimodular_vs_admissible_report(r: Ring) -> UniAdmReport:
    """Classify every pair by exhaustive scans: ``a*x + b*y = 1`` solvable, and completable to GL2."""
    F = _finite(r)
    n = F.size
    uni = _unimodular_mask(F).astype(bool)
    adm = _completion_mask(F).astype(bool)
    bad = np.flatnonzero(uni != adm)
    examples = tuple(
        (F.to_json(int(c % n)), F.to_json(int(c // n)), "unimodular" if uni[c] else "admissible") for c in bad[:10]
    )
    return UniAdmReport(
        ring=F.name,
        pairs=n * n,
        unimodular=int(uni.sum()),
        admissible=int(adm.sum()),
        unimodular_implies_admissible=bool(np.all(adm[uni])),
        admissible_implies_unimodular=bool(np.all(uni[adm])),
        counterexamples=examples,
    )
