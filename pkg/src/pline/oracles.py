"""Slow, table-free reference computations used to cross-check the fast paths.

Everything here goes through the scalar ring operations (or plain integer
linear algebra for matrix rings) and never touches the kernels, so agreement
with :mod:`pline.projective` and :mod:`pline.groups` is a real check.
"""

from __future__ import annotations

import itertools
from collections import deque

from pline.rings import FiniteRing, MatrixRing, ZnRing


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _prime_matrix_ring(r: FiniteRing) -> int | None:
    """``p`` when ``r`` is M2(Z/p), else ``None``."""
    if isinstance(r, MatrixRing) and isinstance(r.base, ZnRing) and r.base.is_field:
        return r.base.size
    return None


def _block(r: FiniteRing, entries) -> list[list[int]]:
    """Flatten a row of ring matrices into a block of integer rows."""
    mats = [r.to_json(x) for x in entries]
    return [sum((m[i] for m in mats), []) for i in range(2)]


def invertible(r: FiniteRing, a, b, c, d) -> bool:
    p = _prime_matrix_ring(r)
    if p is not None:
        return _rank_mod_p(_block(r, (a, b)) + _block(r, (c, d)), p) == 4
    if r.commutative:
        return r.is_unit(r.sub(r.mul(a, d), r.mul(b, c)))
    # injectivity of (x, y) -> (x, y) * M on row vectors
    seen = set()
    for x, y in itertools.product(r.elements(), repeat=2):
        img = (r.add(r.mul(x, a), r.mul(y, c)), r.add(r.mul(x, b), r.mul(y, d)))
        if img in seen:
            return False
        seen.add(img)
    return True


def admissible(r: FiniteRing, a, b) -> bool:
    p = _prime_matrix_ring(r)
    if p is not None:
        return _rank_mod_p(_block(r, (a, b)), p) == 2
    return any(invertible(r, a, b, c, d) for c, d in itertools.product(r.elements(), repeat=2))


def point_class(r: FiniteRing, a, b) -> frozenset:
    return frozenset((r.mul(u, a), r.mul(u, b)) for u in r.units())


def points(r: FiniteRing) -> list[frozenset]:
    classes = {}
    for a, b in itertools.product(r.elements(), repeat=2):
        if admissible(r, a, b):
            cls = point_class(r, a, b)
            classes.setdefault(cls, None)
    return sorted(classes, key=min)


class Graph:
    """Distant graph built from :func:`points`, with plain BFS distances."""

    def __init__(self, r: FiniteRing):
        self.ring = r
        self.points = points(r)
        self.index = {cls: i for i, cls in enumerate(self.points)}
        reps = [min(cls) for cls in self.points]
        m = len(reps)
        self.adj = [[False] * m for _ in range(m)]
        for i, j in itertools.combinations(range(m), 2):
            (a, b), (c, d) = reps[i], reps[j]
            self.adj[i][j] = self.adj[j][i] = invertible(r, a, b, c, d)
        self.dist = [self._bfs(s) for s in range(m)]

    def _bfs(self, s: int) -> list:
        out = [None] * len(self.points)
        out[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, e in enumerate(self.adj[v]):
                if e and out[w] is None:
                    out[w] = out[v] + 1
                    queue.append(w)
        return out

    def connected(self) -> bool:
        return all(d is not None for d in self.dist[0]) if self.points else True

    def diameter(self) -> int:
        return max((d for row in self.dist for d in row if d is not None), default=0)


def gl2_order(r: FiniteRing) -> int:
    return sum(invertible(r, *m) for m in itertools.product(r.elements(), repeat=4))
