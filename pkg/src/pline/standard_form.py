"""Standard forms ``diag(u, v) * E(t_n) * ... * E(t_1)`` over GF(p)[X].

:func:`decompose` runs a continued-fraction (Euclidean) peel on the first row
and then rewrites the resulting word until every middle parameter has degree
at least one, using

* ``E(x) E(0) E(y) = -E(x + y)``
* ``E(x) E(a) E(y) = E(x - 1/a) diag(a, 1/a) E(y - 1/a)`` for a unit ``a``
* ``diag(a, b) E(t) = E(a t / b) diag(b, a)``

GF(p)[X] has a degree function, so the result is the unique (modified)
standard form; the round-trip tests rely on exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from pline.errors import DomainError, PreconditionError
from pline.mat2 import Mat2, e_word, gen_diag, gen_E, identity, mat_invertible
from pline.poly import BiPoly, Poly
from pline.rings import PolyRing, PolySpec, ZnSpec, ring_create


def poly_ring(p: int, nvars: int = 1) -> PolyRing:
    return ring_create(PolySpec(ZnSpec(p), nvars))


@dataclass(frozen=True)
class StandardForm:
    """``diag(u, v) * E(t_n) * ... * E(t_1)`` with ``params = (t_1, ..., t_n)``."""

    ring: PolyRing
    u: Poly
    v: Poly
    params: tuple = ()

    @property
    def length(self) -> int:
        return len(self.params)

    def compose(self) -> Mat2:
        return compose(self)

    def is_well_formed(self, modified: bool = True) -> bool:
        """Units on the diagonal, middle parameters of degree >= 1.

        The modified form needs ``n >= 1``; the plain form forbids
        ``n == 2`` with both parameters zero.
        """
        if not (self.u.is_unit() and self.v.is_unit()):
            return False
        if any(t.deg < 1 for t in self.params[1:-1]):
            return False
        if modified:
            return self.length >= 1
        return not (self.length == 2 and all(t.is_zero() for t in self.params))

    def to_dict(self) -> dict:
        return {
            "u": str(self.u),
            "v": str(self.v),
            "params": [str(t) for t in self.params],
        }

    def __str__(self) -> str:
        factors = "".join(f"E({t})" for t in reversed(self.params))
        return f"diag({self.u},{self.v})" + (f"*{factors}" if factors else "")


def compose(sf: StandardForm, ring: PolyRing | None = None) -> Mat2:
    """The literal product ``diag(u, v) * E(t_n) * ... * E(t_1)``."""
    R = ring or sf.ring
    return gen_diag(R, sf.u, sf.v) @ e_word(R, sf.params)


@dataclass
class _Trace:
    degrees: list = field(default_factory=list)


def _euclid(A: Mat2, trace: _Trace | None = None) -> tuple:
    """Peel ``E(q)`` factors off the right until the first row is ``(unit, 0)``.

    Returns ``(u, v, params)`` with ``A = diag(u, v) * E(t_n) ... E(t_1)``.
    """
    R = A.ring
    a, b, c, d = A.entries
    params = []
    while not b.is_zero():
        if trace is not None:
            trace.degrees.append(b.deg)
        q, _ = divmod(a, b)
        # A = A' E(q) with A' = A E(q)^-1: columns (c1, c2) -> (c2, q*c2 - c1)
        a, b = b, q * b - a
        c, d = d, q * d - c
        params.append(q)
    if trace is not None:
        trace.degrees.append(b.deg)
    # [[a, 0], [c, d]] = diag(-a, -d) E(0) E(d^-1 c)
    s = d.inverse() * c
    params += [s, R.zero]
    return -a, -d, params


def _reduce(R: PolyRing, u, v, params: list) -> tuple:
    """Rewrite away zero and unit middle parameters."""
    changed = True
    while changed:
        changed = False
        for i in range(1, len(params) - 1):
            t = params[i]
            if t.is_zero():
                params[i - 1 : i + 2] = [params[i - 1] + params[i + 1]]
                u, v = -u, -v
                changed = True
                break
            if t.is_unit():
                ti = t.inverse()
                left = params[i + 1] - ti
                right = params[i - 1] - ti
                alpha, beta = t, ti
                # push diag(alpha, beta) to the left over E(left) and everything above it
                moved = []
                for s in [left] + params[i + 2 :]:
                    moved.append(alpha * s * beta.inverse())
                    alpha, beta = beta, alpha
                params[i - 1 :] = [right] + moved
                u, v = u * alpha, v * beta
                changed = True
                break
    return u, v, params


def decompose(A: Mat2, modified: bool = True) -> StandardForm:
    """Standard form of an invertible matrix over GF(p)[X].

    With ``modified=True`` (the default) diagonal matrices come back as
    ``-A * E(0)^2``; with ``modified=False`` they come back with no
    parameters.
    """
    R = A.ring
    if not isinstance(R, PolyRing) or R.nvars != 1:
        raise DomainError(f"decompose works over GF(p)[X], got {R}")
    if not mat_invertible(A):
        raise DomainError(f"matrix is not invertible over {R}: det = {A.det()}")
    u, v, params = _euclid(A)
    u, v, params = _reduce(R, u, v, params)
    sf = StandardForm(R, u, v, tuple(params))
    if not modified and len(params) == 2 and all(t.is_zero() for t in params):
        sf = StandardForm(R, -u, -v, ())
    return sf


def euclid_degrees(A: Mat2) -> list:
    """Degrees of the working remainder at each Euclidean step (strictly decreasing)."""
    trace = _Trace()
    _euclid(A, trace)
    return trace.degrees


# -- infinite-diameter certificates -----------------------------------------------


@dataclass(frozen=True)
class DistanceCertificate:
    t: str
    m: int
    params: tuple
    unique_form: bool
    chain_ok: bool

    @property
    def verified(self) -> bool:
        return self.unique_form and self.chain_ok

    @property
    def distance(self) -> int:
        return self.m

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "m": self.m,
            "params": list(self.params),
            "unique_form": self.unique_form,
            "chain_ok": self.chain_ok,
            "verified": self.verified,
            "distance": self.m,
        }

    def __str__(self) -> str:
        status = "ok" if self.verified else "FAILED"
        return f"m={self.m}: dist(q0, q{self.m}) = {self.m}  [{status}; standard form E({self.t})^{self.m}]"


def distance_certificate(t: Poly, m: int) -> DistanceCertificate:
    """Certify ``dist(q_0, q_m) = m`` for ``q_m = R((1, 0) * E(t)^m)``.

    The standard form of ``E(t)^m`` must be exactly ``m`` copies of ``t``
    (with trivial diagonal); uniqueness then rules out any shorter chain.
    The prefix chain ``q_0, q_1, ..., q_m`` is also checked to be distant
    step by step, which gives the matching upper bound.
    """
    if not isinstance(t, Poly):
        raise PreconditionError("t must be a univariate polynomial")
    if t.deg < 1:
        raise PreconditionError(f"t must be a nonzero non-unit, got {t}")
    if m < 1:
        raise PreconditionError("m must be at least 1")
    R = poly_ring(t.p)
    power = gen_E(R, t) ** m
    sf = decompose(power)
    unique = sf.params == (t,) * m and sf.u == R.one and sf.v == R.one
    rows = [identity(R)]
    for _ in range(m):
        rows.append(gen_E(R, t) @ rows[-1])
    chain_ok = all(
        mat_invertible(Mat2(R, rows[i].a, rows[i].b, rows[i + 1].a, rows[i + 1].b)) for i in range(m)
    )
    return DistanceCertificate(str(t), m, tuple(str(s) for s in sf.params), unique, chain_ok)


def certify_range(t: Poly, mmax: int) -> tuple[list[DistanceCertificate], bool]:
    """Certificates for ``m = 1..mmax``; the flag says the diameter outgrows ``mmax - 1``."""
    certs = [distance_certificate(t, m) for m in range(1, mmax + 1)]
    return certs, all(c.verified for c in certs)


# -- the bivariate power identity ---------------------------------------------------


@dataclass(frozen=True)
class XYReport:
    p: int
    nmax: int
    power_identity: dict
    det_a1: str
    identity_at: tuple
    identity_iff_char_divides: bool
    conjugate_b12: list
    conjugate_det: str

    @property
    def ok(self) -> bool:
        return all(self.power_identity.values()) and self.det_a1 == "1" and self.identity_iff_char_divides

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["power_identity"] = {str(k): v for k, v in self.power_identity.items()}
        d["identity_at"] = list(self.identity_at)
        d["ok"] = self.ok
        return d


def xy_closed_form(R: PolyRing, n: int) -> Mat2:
    p = R.p
    x1, x2 = BiPoly.var(p, 1), BiPoly.var(p, 2)
    one = R.one
    return Mat2(R, one + n * x1 * x2, n * x1 * x1, -n * x2 * x2, one - n * x1 * x2)


def xy_matrix_check(p: int, nmax: int) -> XYReport:
    """Check ``A_1^n`` against its closed form for ``n = 0..nmax`` over GF(p)[X1, X2]."""
    R = poly_ring(p, 2)
    A1 = xy_closed_form(R, 1)
    I = identity(R)
    power = I
    results = {}
    at_identity = []
    for n in range(nmax + 1):
        if n:
            power = power @ A1
        results[n] = power == xy_closed_form(R, n)
        if power == I:
            at_identity.append(n)
    iff = all((n in at_identity) == (n % p == 0) for n in range(nmax + 1))
    A1_inv = xy_closed_form(R, -1)
    if A1 @ A1_inv != I:
        raise DomainError("closed form of A_-1 is not the inverse of A_1")  # pragma: no cover
    b12 = Mat2(R, R.one, R.one, R.zero, R.one)
    conj = A1_inv @ b12 @ A1
    return XYReport(
        p=p,
        nmax=nmax,
        power_identity=results,
        det_a1=str(A1.det()),
        identity_at=tuple(at_identity),
        identity_iff_char_divides=iff,
        conjugate_b12=[[str(conj.a), str(conj.b)], [str(conj.c), str(conj.d)]],
        conjugate_det=str(conj.det()),
    )


def parse_matrix(R: PolyRing, entries) -> Mat2:
    """Matrix from four polynomial strings ``a, b, c, d`` (row-major)."""
    if len(entries) != 4:
        raise PreconditionError("a matrix needs exactly four entries")
    return Mat2(R, *(R.parse(e) if isinstance(e, str) else R.from_json(e) for e in entries))
