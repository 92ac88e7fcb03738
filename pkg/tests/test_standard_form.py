import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pline.errors import DomainError, PreconditionError
from pline.mat2 import Mat2, e_word, gen_B12, gen_B21, gen_diag, gen_E, identity
from pline.poly import Poly
from pline.standard_form import (
    StandardForm,
    certify_range,
    compose,
    decompose,
    distance_certificate,
    euclid_degrees,
    parse_matrix,
    poly_ring,
    xy_closed_form,
    xy_matrix_check,
)
from pline.verify import random_poly, random_standard_form


def P(text, p=2):
    return Poly.parse(text, p)


def test_compose_examples():
    R = poly_ring(3)
    one = R.one
    assert compose(StandardForm(R, one, one, ())) == identity(R)
    assert compose(StandardForm(R, one, one, (R.zero, R.zero))) == Mat2(R, -one, R.zero, R.zero, -one)
    t = P("X+2", 3)
    assert compose(StandardForm(R, one, one, (t,))) == gen_E(R, t)


def test_decompose_examples():
    R = poly_ring(2)
    X = P("X")
    assert decompose(gen_E(R, X) @ gen_E(R, X)).params == (X, X)
    R3 = poly_ring(3)
    ts = (P("X^3", 3), P("X", 3), P("X^2+1", 3))  # (t_1, t_2, t_3)
    sf = decompose(e_word(R3, ts))
    assert sf.params == ts and sf.u == R3.one and sf.v == R3.one


def test_b12_side_condition():
    # the elementary matrix needs t_1 = 0 in its standard form
    R = poly_ring(3)
    sf = decompose(gen_B12(R, R.one))
    assert sf.compose() == gen_B12(R, R.one)
    assert sf.length == 2 and sf.params[0].is_zero() and not sf.params[1].is_zero()
    assert sf.is_well_formed(modified=False)


def test_diagonal_conventions():
    R = poly_ring(3)
    A = gen_diag(R, Poly(3, [2]), Poly(3, [1]))
    modified = decompose(A)
    assert modified.params == (R.zero, R.zero) and (modified.u, modified.v) == (-A.a, -A.d)
    plain = decompose(A, modified=False)
    assert plain.params == () and (plain.u, plain.v) == (A.a, A.d)
    assert modified.compose() == plain.compose() == A


def test_plain_and_modified_agree_off_diagonal():
    R = poly_ring(2)
    rnd = random.Random(5)
    for _ in range(100):
        sf = random_standard_form(2, rnd)
        A = sf.compose()
        if not A.is_diagonal():
            assert decompose(A) == decompose(A, modified=False)


def test_non_invertible_rejected():
    R = poly_ring(2)
    with pytest.raises(DomainError):
        decompose(Mat2(R, P("X"), R.zero, R.zero, R.one))
    with pytest.raises(DomainError):
        decompose(Mat2(poly_ring(2, 2), *(poly_ring(2, 2).one,) * 4))


@pytest.mark.parametrize("p", [2, 3])
@given(seed=st.integers(0, 2**32 - 1))
def test_round_trip_uniqueness(p, seed):
    sf = random_standard_form(p, random.Random(seed))
    assert sf.is_well_formed()
    assert decompose(sf.compose()) == sf


@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8))
def test_decompose_recomposes_elementary_products(seed, n):
    rnd = random.Random(seed)
    R = poly_ring(2)
    A = identity(R)
    for _ in range(n):
        kind = rnd.randrange(3)
        if kind == 0:
            A = A @ gen_B12(R, random_poly(2, rnd, -1, 4))
        elif kind == 1:
            A = A @ gen_B21(R, random_poly(2, rnd, -1, 4))
        else:
            A = A @ gen_diag(R, R.one, R.one)
    sf = decompose(A)
    assert sf.compose() == A and sf.is_well_formed()


@given(seed=st.integers(0, 2**32 - 1))
def test_euclid_degrees_decrease(seed):
    sf = random_standard_form(3, random.Random(seed))
    degs = euclid_degrees(sf.compose())
    assert all(a > b for a, b in zip(degs, degs[1:]))


def test_certificates():
    for t, p, m in [("X", 2, 1), ("X", 2, 5), ("X^2+X", 3, 3)]:
        c = distance_certificate(P(t, p), m)
        assert c.verified and c.distance == m and len(c.params) == m
    certs, ok = certify_range(P("X"), 8)
    assert ok and [c.m for c in certs] == list(range(1, 9))
    assert "dist(q0, q3) = 3" in str(certs[2])


@pytest.mark.parametrize("t", ["0", "1"])
def test_certificate_preconditions(t):
    with pytest.raises(PreconditionError):
        distance_certificate(P(t), 2)
    with pytest.raises(PreconditionError):
        distance_certificate(P("X"), 0)


def test_xy_identity():
    rep = xy_matrix_check(5, 10)
    assert rep.ok and rep.identity_at == (0, 5, 10) and rep.det_a1 == "1"
    rep2 = xy_matrix_check(2, 4)
    assert rep2.ok and 2 in rep2.identity_at
    R = poly_ring(3, 2)
    assert xy_closed_form(R, 0) == identity(R)
    d = rep.to_dict()
    assert d["ok"] and d["power_identity"]["5"]


def test_parse_matrix():
    R = poly_ring(2)
    A = parse_matrix(R, ["X^2+1", "X", "X", "1"])
    assert A == gen_E(R, P("X")) @ gen_E(R, P("X"))
    with pytest.raises(PreconditionError):
        parse_matrix(R, ["1", "0", "0"])


def test_standard_form_str():
    R = poly_ring(2)
    sf = StandardForm(R, R.one, R.one, (P("X"), P("X+1")))
    assert str(sf) == "diag(1,1)*E(X+1)E(X)"
    assert sf.to_dict() == {"u": "1", "v": "1", "params": ["X", "X+1"]}
