"""K-chains of the chain geometry over a finite ring and checks of its incidence axioms."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

import numpy as np

from pline import kernels
from pline.errors import PlineError
from pline.groups import Budget, gl2_codes
from pline.mat2 import Mat2
from pline.projective import DistantGraph, Point, build_graph, projective_line
from pline.rings import FiniteRing, Ring


class SubfieldError(PlineError, ValueError):
    """The given subset is not a subfield; ``axiom`` names the failed condition."""

    def __init__(self, axiom: str, detail: str):
        self.axiom = axiom
        super().__init__(f"not a subfield ({axiom}): {detail}")


@dataclass(frozen=True)
class Subfield:
    ring: FiniteRing
    elements: frozenset

    def __len__(self) -> int:
        return len(self.elements)


def subfield_check(r: Ring, subset) -> Subfield:
    """Validate that ``subset`` (element indices) is a subfield of ``r``."""
    if not isinstance(r, FiniteRing):
        raise SubfieldError("finite", f"{r} is not a finite ring")
    K = frozenset(int(x) for x in subset)
    for x in K:
        r._check(x)
    fmt = r.fmt
    if r.zero not in K:
        raise SubfieldError("contains 0", "0 missing")
    if r.one not in K:
        raise SubfieldError("contains 1", "1 missing")
    if r.trivial:
        raise SubfieldError("1 != 0", "the zero ring has no subfield")
    for x, y in itertools.product(sorted(K), repeat=2):
        if r.add(x, y) not in K:
            raise SubfieldError("closed under addition", f"{fmt(x)}+{fmt(y)} = {fmt(r.add(x, y))} not in subset")
        if r.mul(x, y) not in K:
            raise SubfieldError("closed under multiplication", f"{fmt(x)}*{fmt(y)} = {fmt(r.mul(x, y))} not in subset")
    for x in K:
        if r.neg(x) not in K:
            raise SubfieldError("closed under negation", f"-{fmt(x)} = {fmt(r.neg(x))} not in subset")
        if x != r.zero:
            if not r.is_unit(x):
                raise SubfieldError("nonzero elements are units", f"{fmt(x)} is not a unit of {r}")
            if r.unit_inverse(x) not in K:
                raise SubfieldError("closed under inverses", f"{fmt(x)}^-1 not in subset")
    return Subfield(r, K)


@dataclass(frozen=True)
class Chain:
    """Point set of one K-chain, with a matrix mapping the base chain onto it."""

    points: frozenset
    indices: tuple
    witness: Mat2 = field(compare=False)

    def __len__(self) -> int:
        return len(self.points)


def base_chain(k: Subfield) -> list[Point]:
    """``{R(1, x) : x in K} + {R(0, 1)}``."""
    r = k.ring
    line = projective_line(r)
    n = r.size
    pairs = [(r.one, x) for x in sorted(k.elements)] + [(r.zero, r.one)]
    return [line.points[line.pair_to_point[a + n * b]] for a, b in pairs]


@functools.lru_cache(maxsize=None)
def _chains_cached(r: FiniteRing, elements: frozenset, ring_size: int) -> tuple:
    k = Subfield(r, elements)
    line = projective_line(r)
    n = r.size
    base = base_chain(k)
    base_pairs = np.array([p.pair for p in base], dtype=np.int64)
    codes = gl2_codes(r, Budget(ring_size=ring_size))
    mats = np.stack([codes % n, codes // n % n, codes // n**2 % n, codes // n**3], axis=1)
    t = r.tables
    images = line.pair_to_point[kernels.backend.act_on_pairs(t.add, t.mul, base_pairs, mats)]
    images.sort(axis=1)
    uniq, first = np.unique(images, axis=0, return_index=True)
    chains = []
    for row, i in zip(uniq, first):
        idx = tuple(int(j) for j in row)
        chains.append(Chain(frozenset(line.points[j] for j in idx), idx, Mat2.from_code(r, codes[i])))
    return tuple(chains)


def enumerate_chains(r: Ring, k: Subfield, budget: Budget | None = None) -> list[Chain]:
    """All K-chains: images of the base chain under every matrix of GL2(R), deduplicated."""
    b = budget if budget is not None else Budget.from_env()
    gl2_codes(r, b)  # budget check
    return list(_chains_cached(k.ring, k.elements, b.ring_size))


@dataclass
class AxiomReport:
    ring: str
    subfield_size: int
    points: int
    chains: int
    triples_checked: int
    pairs_checked: int
    triple_counterexamples: list
    pair_counterexamples: list
    chain_size_ok: bool
    chains_mutually_distant: bool

    @property
    def ok(self) -> bool:
        return (
            not self.triple_counterexamples
            and not self.pair_counterexamples
            and self.chain_size_ok
            and self.chains_mutually_distant
        )

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def verify_chain_axioms(r: Ring, k: Subfield, budget: Budget | None = None) -> AxiomReport:
    """Exhaustively check the two incidence axioms of the chain geometry.

    * three mutually distant points lie on at least one chain;
    * two distinct points are distant exactly when some chain contains both.
    """
    chains = enumerate_chains(r, k, budget)
    g = build_graph(k.ring)
    m = len(g)
    adj = g.adjacency
    on_common = np.zeros((m, m), dtype=bool)
    triples = set()
    for c in chains:
        idx = c.indices
        on_common[np.ix_(idx, idx)] = True
        triples.update(itertools.combinations(idx, 3))
    triple_bad = []
    n_triples = 0
    for i, j, l in itertools.combinations(range(m), 3):
        if adj[i, j] and adj[i, l] and adj[j, l]:
            n_triples += 1
            if (i, j, l) not in triples:
                triple_bad.append([g.points[x].label for x in (i, j, l)])
    pair_bad = []
    for i, j in itertools.combinations(range(m), 2):
        if bool(adj[i, j]) != bool(on_common[i, j]):
            pair_bad.append([g.points[i].label, g.points[j].label, "distant" if adj[i, j] else "common chain"])
    size_ok = all(len(c) == len(k) + 1 for c in chains)
    mutual = all(adj[i, j] for c in chains for i, j in itertools.combinations(c.indices, 2))
    return AxiomReport(
        ring=k.ring.name,
        subfield_size=len(k),
        points=m,
        chains=len(chains),
        triples_checked=n_triples,
        pairs_checked=m * (m - 1) // 2,
        triple_counterexamples=triple_bad,
        pair_counterexamples=pair_bad,
        chain_size_ok=size_ok,
        chains_mutually_distant=mutual,
    )


def chain_component_containment(r: Ring, k: Subfield, g: DistantGraph | None = None) -> dict:
    """Check that every chain lies inside a single connected component."""
    g = g if g is not None else build_graph(k.ring)
    chains = enumerate_chains(r, k)
    spanning = [c.indices for c in chains if len({int(g.component[i]) for i in c.indices}) != 1]
    return {
        "ring": k.ring.name,
        "chains": len(chains),
        "components": g.n_components,
        "contained": not spanning,
        "violations": [list(v) for v in spanning[:10]],
    }
