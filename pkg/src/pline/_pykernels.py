"""Numpy implementations of the table-driven kernels.

Every function takes the dense tables of a finite ring (see
:class:`pline.rings.RingTables`) and works purely on element indices.
Matrices are encoded as ``a + n*b + n^2*c + n^3*d`` for ``[[a, b], [c, d]]``
and row pairs ``(x, y)`` as ``x + n*y``.  The compiled module
``pline._ckernels`` exposes the same functions with identical semantics.
"""

from __future__ import annotations

import numpy as np


def _det_unit(add, mul, neg, unit, a, b, c, d):
    return unit[add[mul[a, d], neg[mul[b, c]]]].astype(bool)


def _block(add, mul, a, b):
    """Invertibility of ``[[a, b], [c, d]]`` for every ``(c, d)``, as a flat bool array.

    Uses injectivity of ``(x, y) -> (x*a + y*c, x*b + y*d)`` on all ``n^2`` row
    vectors; index of the result is ``c + n*d``.
    """
    n = len(add)
    xs = np.arange(n)
    xa = mul[xs, a][:, None, None]
    xb = mul[xs, b][:, None, None]
    first = add[xa, mul[None, :, :]]  # [x, y, c]: x*a + y*c
    second = add[xb, mul[None, :, :]]  # [x, y, d]: x*b + y*d
    codes = first[:, :, :, None] + n * second[:, :, None, :]
    codes = codes.reshape(n * n, n * n)  # rows (x, y), columns c*n + d
    codes.sort(axis=0)
    distinct = (np.diff(codes, axis=0) != 0).all(axis=0)
    return distinct.reshape(n, n).T.reshape(-1)


def invertible(add, mul, neg, unit, commutative, a, b, c, d) -> bool:
    if commutative:
        return bool(unit[add[mul[a, d], neg[mul[b, c]]]])
    n = len(add)
    xs = np.repeat(np.arange(n), n)
    ys = np.tile(np.arange(n), n)
    img = add[mul[xs, a], mul[ys, c]] + n * add[mul[xs, b], mul[ys, d]]
    return len(np.unique(img)) == n * n


def invertible_many(add, mul, neg, unit, commutative, mats) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64).reshape(-1, 4)
    if commutative:
        return _det_unit(add, mul, neg, unit, mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3]).astype(np.uint8)
    return np.array([invertible(add, mul, neg, unit, False, *m) for m in mats], dtype=np.uint8)


def gl2_codes(add, mul, neg, unit, commutative) -> np.ndarray:
    n = len(add)
    if commutative:
        code = np.arange(n**4, dtype=np.int64)
        a, b, c, d = code % n, code // n % n, code // n**2 % n, code // n**3
        return code[_det_unit(add, mul, neg, unit, a, b, c, d)]
    out = []
    cd = np.arange(n * n, dtype=np.int64)
    for b in range(n):
        for a in range(n):
            ok = _block(add, mul, a, b)
            c, d = cd[ok] % n, cd[ok] // n
            out.append(a + n * b + n**2 * c + n**3 * d)
    return np.sort(np.concatenate(out)) if out else np.zeros(0, dtype=np.int64)


def admissible_mask(add, mul, neg, unit, commutative) -> np.ndarray:
    """Pairs ``(a, b)`` completing to an invertible matrix, by exhaustive search over ``(c, d)``."""
    n = len(add)
    mask = np.zeros(n * n, dtype=np.uint8)
    if commutative:
        c = np.arange(n * n) % n
        d = np.arange(n * n) // n
        for b in range(n):
            for a in range(n):
                mask[a + n * b] = _det_unit(add, mul, neg, unit, a, b, c, d).any()
        return mask
    for b in range(n):
        for a in range(n):
            mask[a + n * b] = _block(add, mul, a, b).any()
    return mask


def unimodular_mask(add, mul) -> np.ndarray:
    """Pairs ``(a, b)`` with ``a*x + b*y = 1`` for some ``x, y``."""
    n = len(add)
    one = 1 if n > 1 else 0
    mask = np.zeros(n * n, dtype=np.uint8)
    for b in range(n):
        for a in range(n):
            sums = add[mul[a, :][:, None], mul[b, :][None, :]]
            mask[a + n * b] = (sums == one).any()
    return mask


def distant_matrix(add, mul, neg, unit, commutative, pairs) -> np.ndarray:
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    n = len(add)
    m = len(pairs)
    if commutative:
        a, b = pairs[:, 0][:, None], pairs[:, 1][:, None]
        c, d = pairs[:, 0][None, :], pairs[:, 1][None, :]
        return _det_unit(add, mul, neg, unit, a, b, c, d).astype(np.uint8)
    out = np.zeros((m, m), dtype=np.uint8)
    codes = pairs[:, 0] + n * pairs[:, 1]
    for i, (a, b) in enumerate(pairs):
        out[i] = _block(add, mul, a, b)[codes]
    return out


def bfs_distances(adj) -> np.ndarray:
    adj = np.asarray(adj, dtype=bool)
    m = len(adj)
    dist = np.full((m, m), -1, dtype=np.int64)
    for s in range(m):
        row = dist[s]
        row[s] = 0
        frontier = np.zeros(m, dtype=bool)
        frontier[s] = True
        level = 0
        while frontier.any():
            level += 1
            nxt = adj[frontier].any(axis=0) & (row < 0)
            row[nxt] = level
            frontier = nxt
    return dist


def group_closure(add, mul, gens, limit) -> np.ndarray:
    """Codes of the group generated by ``gens`` (closure from the identity)."""
    n = len(add)
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, 4)
    ident = np.int64(1 + n**3) if n > 1 else np.int64(0)
    seen = np.array([ident], dtype=np.int64)
    frontier = seen
    while len(frontier):
        a, b, c, d = frontier % n, frontier // n % n, frontier // n**2 % n, frontier // n**3
        new = []
        for g11, g12, g21, g22 in gens:
            r11 = add[mul[a, g11], mul[b, g21]]
            r12 = add[mul[a, g12], mul[b, g22]]
            r21 = add[mul[c, g11], mul[d, g21]]
            r22 = add[mul[c, g12], mul[d, g22]]
            new.append(r11 + n * r12 + n**2 * r21 + n**3 * r22)
        cand = np.unique(np.concatenate(new))
        frontier = cand[~np.isin(cand, seen, assume_unique=True)]
        seen = np.union1d(seen, frontier)
        if len(seen) > limit:
            raise OverflowError(len(seen))
    return seen


def act_on_pairs(add, mul, pairs, mats) -> np.ndarray:
    """Pair codes of ``(x, y) * M`` for every matrix (rows) and pair (columns)."""
    n = len(add)
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    mats = np.asarray(mats, dtype=np.int64).reshape(-1, 4)
    x, y = pairs[:, 0][None, :], pairs[:, 1][None, :]
    g11, g12, g21, g22 = (mats[:, i][:, None] for i in range(4))
    u = add[mul[x, g11], mul[y, g21]]
    v = add[mul[x, g12], mul[y, g22]]
    return u + n * v
