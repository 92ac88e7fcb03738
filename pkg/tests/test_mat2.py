import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TEST_RINGS
from pline import oracles
from pline.errors import ConsistencyError, DomainError, PreconditionError
from pline.groups import gl2_enumerate
from pline.mat2 import (
    Mat2,
    e_word,
    gen_B12,
    gen_B21,
    gen_diag,
    gen_E,
    identity,
    lemma_factor,
    mat_inverse,
    mat_invertible,
)
from pline.rings import ring


def test_identity_and_examples():
    R = ring("Z/4")
    assert mat_invertible(identity(R)) and mat_inverse(identity(R)) == identity(R)
    assert not mat_invertible(Mat2(R, 1, 0, 1, 2))
    with pytest.raises(DomainError):
        mat_inverse(Mat2(R, 1, 0, 1, 2))


@pytest.mark.parametrize("name", TEST_RINGS)
def test_E_inverse_formula(name):
    R = ring(name)
    for t in R.elements():
        inv = gen_E(R, R.zero) @ gen_E(R, R.neg(t)) @ gen_E(R, R.zero)
        assert gen_E(R, t) @ inv == identity(R) == inv @ gen_E(R, t)
        assert mat_inverse(gen_E(R, t)) == inv


def test_E_from_elementary_matrices():
    R = ring("Z/4")
    one, m1 = R.one, R.neg(R.one)
    for t in R.elements():
        assert gen_E(R, t) == gen_B12(R, one) @ gen_B21(R, m1) @ gen_B12(R, one) @ gen_B21(R, t)


def test_elementary_from_E():
    R = ring("F3")
    e0_inv = mat_inverse(gen_E(R, R.zero))
    for t in R.elements():
        assert gen_B12(R, t) == gen_E(R, R.neg(t)) @ e0_inv
        assert gen_B21(R, t) == e0_inv @ gen_E(R, t)


@pytest.mark.parametrize("name", TEST_RINGS)
def test_E0_squared(name):
    R = ring(name)
    m1 = R.neg(R.one)
    assert gen_E(R, R.zero) ** 2 == Mat2(R, m1, R.zero, R.zero, m1)


def test_diag_needs_units():
    R = ring("Z/4")
    with pytest.raises(DomainError):
        gen_diag(R, 2, 1)


def test_e_word_order():
    R = ring("Z/6")
    assert e_word(R, [2, 5]) == gen_E(R, 5) @ gen_E(R, 2)


@pytest.mark.parametrize("name", ["Z/4", "F2[e]"])
def test_fast_path_matches_injectivity(name):
    R = ring(name)
    for m in itertools.product(R.elements(), repeat=4):
        seen = {(R.add(R.mul(x, m[0]), R.mul(y, m[2])), R.add(R.mul(x, m[1]), R.mul(y, m[3])))
                for x in R.elements() for y in R.elements()}
        assert mat_invertible(Mat2(R, *m)) == (len(seen) == R.size**2)


@pytest.mark.parametrize("name", ["M2(F2)", "F2 x F2", "F3[e]"])
def test_invertible_matches_oracle(name):
    R = ring(name)
    rnd = random.Random(1)
    for _ in range(300):
        m = [rnd.randrange(R.size) for _ in range(4)]
        assert mat_invertible(Mat2(R, *m)) == oracles.invertible(R, *m)


@pytest.mark.parametrize("name", ["Z/4", "F2[e]", "M2(F2)", "F4"])
@given(data=st.data())
def test_group_laws(name, data):
    R = ring(name)
    gl2 = gl2_enumerate(R)
    A, B = data.draw(st.sampled_from(gl2)), data.draw(st.sampled_from(gl2))
    assert mat_invertible(A @ B)
    assert mat_inverse(A @ B) == mat_inverse(B) @ mat_inverse(A)
    x, y = data.draw(st.integers(0, R.size - 1)), data.draw(st.integers(0, R.size - 1))
    assert (A @ B).row_action(x, y) == B.row_action(*A.row_action(x, y))


def test_lemma_examples():
    R = ring("Z/4")
    I = identity(R)
    assert lemma_factor(I, I) == (0, 1)
    assert lemma_factor(Mat2(R, 1, 0, 1, 1), I) == (1, 1)
    s, u = lemma_factor(Mat2(R, 1, 0, 0, 2), I)
    assert (s, u) == (0, 2) and not R.is_unit(u)


def test_lemma_equivalence_exhaustive():
    R = ring("Z/4")
    for xp in gl2_enumerate(R):
        for c, d in itertools.product(R.elements(), repeat=2):
            x = Mat2(R, xp.a, xp.b, c, d)
            _, u = lemma_factor(x, xp)
            assert R.is_unit(u) == mat_invertible(x)


def test_lemma_preconditions():
    R = ring("Z/4")
    I = identity(R)
    with pytest.raises(PreconditionError):
        lemma_factor(Mat2(R, 0, 1, 1, 0), I)
    with pytest.raises(PreconditionError):
        lemma_factor(I, Mat2(R, 1, 0, 0, 2))
    assert issubclass(ConsistencyError, AssertionError)
