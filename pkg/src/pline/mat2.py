"""2x2 matrices over a ring, and the generators E(t), B12(t), B21(t), diag(u, v)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from pline import kernels
from pline.errors import CapabilityError, ConsistencyError, DomainError, PreconditionError
from pline.rings import FiniteRing, Ring


@dataclass(frozen=True)
class Mat2:
    """The matrix ``[[a, b], [c, d]]`` with raw entries from ``ring``.

    Row vectors act from the left: ``(x, y) * M``.  Equality compares the
    ring as well as the entries.
    """

    ring: Ring
    a: Any
    b: Any
    c: Any
    d: Any

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def rows(self) -> tuple[tuple, tuple]:
        return (self.a, self.b), (self.c, self.d)

    def __matmul__(self, other: Mat2) -> Mat2:
        if other.ring != self.ring:
            raise DomainError(f"cannot multiply matrices over {self.ring} and {other.ring}")
        R = self.ring
        add, mul = R.add, R.mul
        return Mat2(
            R,
            add(mul(self.a, other.a), mul(self.b, other.c)),
            add(mul(self.a, other.b), mul(self.b, other.d)),
            add(mul(self.c, other.a), mul(self.d, other.c)),
            add(mul(self.c, other.b), mul(self.d, other.d)),
        )

    __mul__ = __matmul__

    def __pow__(self, k: int) -> Mat2:
        if k < 0:
            return mat_inverse(self) ** (-k)
        result, base = identity(self.ring), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __neg__(self) -> Mat2:
        n = self.ring.neg
        return Mat2(self.ring, n(self.a), n(self.b), n(self.c), n(self.d))

    def scale(self, u) -> Mat2:
        """Left scalar multiple ``u * M``."""
        m = self.ring.mul
        return Mat2(self.ring, m(u, self.a), m(u, self.b), m(u, self.c), m(u, self.d))

    def row_action(self, x, y) -> tuple:
        """The row vector ``(x, y) * M``."""
        R = self.ring
        return (
            R.add(R.mul(x, self.a), R.mul(y, self.c)),
            R.add(R.mul(x, self.b), R.mul(y, self.d)),
        )

    def det(self):
        """``a*d - b*c``; only meaningful (and only allowed) over commutative rings."""
        if not self.ring.commutative:
            raise CapabilityError(f"determinant is undefined over the noncommutative ring {self.ring}")
        R = self.ring
        return R.sub(R.mul(self.a, self.d), R.mul(self.b, self.c))

    def is_diagonal(self) -> bool:
        z = self.ring.zero
        return self.ring.equal(self.b, z) and self.ring.equal(self.c, z)

    # finite-ring encoding ------------------------------------------------

    @property
    def code(self) -> int:
        n = _finite(self.ring).size
        return self.a + n * self.b + n * n * self.c + n**3 * self.d

    @classmethod
    def from_code(cls, ring: FiniteRing, code: int) -> Mat2:
        n = ring.size
        code = int(code)
        return cls(ring, code % n, code // n % n, code // n**2 % n, code // n**3)

    def to_json(self) -> list:
        f = self.ring.to_json
        return [[f(self.a), f(self.b)], [f(self.c), f(self.d)]]

    def __str__(self) -> str:
        f = self.ring.fmt
        return f"[[{f(self.a)}, {f(self.b)}], [{f(self.c)}, {f(self.d)}]]"


def _finite(r: Ring) -> FiniteRing:
    if not isinstance(r, FiniteRing):
        raise CapabilityError(f"{r} is not a finite ring")
    return r


def mat(ring: Ring, a, b, c, d) -> Mat2:
    """Build a matrix from JSON-style entry values (ints, coefficient lists, polynomial strings)."""
    f = ring.from_json
    return Mat2(ring, f(a), f(b), f(c), f(d))


def identity(r: Ring) -> Mat2:
    return Mat2(r, r.one, r.zero, r.zero, r.one)


def gen_E(r: Ring, t) -> Mat2:
    """``E(t) = [[t, 1], [-1, 0]]``."""
    return Mat2(r, t, r.one, r.neg(r.one), r.zero)


def gen_B12(r: Ring, t) -> Mat2:
    return Mat2(r, r.one, t, r.zero, r.one)


def gen_B21(r: Ring, t) -> Mat2:
    return Mat2(r, r.one, r.zero, t, r.one)


def gen_diag(r: Ring, u, v) -> Mat2:
    if not (r.is_unit(u) and r.is_unit(v)):
        raise DomainError(f"diag(u, v) needs units, got u={r.fmt(u)}, v={r.fmt(v)}")
    return Mat2(r, u, r.zero, r.zero, v)


def e_word(r: Ring, params) -> Mat2:
    """``E(t_n) * ... * E(t_1)`` for ``params = (t_1, ..., t_n)``."""
    m = identity(r)
    for t in params:
        m = gen_E(r, t) @ m
    return m


def mat_invertible(m: Mat2) -> bool:
    """Two-sided invertibility of ``m`` in the matrix ring.

    Commutative rings test ``det(m)`` for being a unit.  Other finite rings
    test injectivity of ``(x, y) -> (x, y) * m`` over all row vectors, which
    for a finite module is equivalent to invertibility.
    """
    R = m.ring
    if R.commutative:
        return R.is_unit(m.det())
    t = _finite(R).tables
    return kernels.backend.invertible(t.add, t.mul, t.neg, t.unit, False, *map(int, m.entries))


def mat_inverse(m: Mat2) -> Mat2:
    R = m.ring
    if R.commutative:
        det = m.det()
        if not R.is_unit(det):
            raise DomainError(f"{m} is not invertible (det {R.fmt(det)} is not a unit)")
        di = R.unit_inverse(det)
        return Mat2(R, R.mul(di, m.d), R.neg(R.mul(di, m.b)), R.neg(R.mul(di, m.c)), R.mul(di, m.a))
    F = _finite(R)
    # solve (x, y) * m = e_i by scanning all row vectors
    solutions = {}
    targets = {(F.one, F.zero): 0, (F.zero, F.one): 1}
    for x in F.elements():
        for y in F.elements():
            img = m.row_action(x, y)
            if img in targets and img not in solutions:
                solutions[img] = (x, y)
    if len(solutions) < 2:
        raise DomainError(f"{m} is not invertible over {R}")
    (p, q), (r_, s) = solutions[(F.one, F.zero)], solutions[(F.zero, F.one)]
    inv = Mat2(R, p, q, r_, s)
    if inv @ m != identity(R) or m @ inv != identity(R):
        raise DomainError(f"{m} has only a one-sided inverse over {R}")
    return inv


def lemma_factor(x: Mat2, xp: Mat2) -> tuple:
    """Factor ``x = M * xp`` with ``M = [[1, 0], [s, u]]``; return ``(s, u)``.

    ``xp`` must be invertible and share its first row with ``x``.  The
    returned ``u`` is a unit exactly when ``x`` is invertible.
    """
    R = x.ring
    if xp.ring != R:
        raise PreconditionError("matrices over different rings")
    if not (R.equal(x.a, xp.a) and R.equal(x.b, xp.b)):
        raise PreconditionError("x and xp must have the same first row")
    if not mat_invertible(xp):
        raise PreconditionError("xp must be invertible")
    M = x @ mat_inverse(xp)
    if not (R.equal(M.a, R.one) and R.equal(M.b, R.zero)):
        raise ConsistencyError(f"x * xp^-1 = {M} is not of the form [[1, 0], [s, u]]")
    return M.c, M.d
