import itertools
import json

import pytest

from conftest import TEST_RINGS
from pline.errors import CapabilityError, DomainError, SpecError
from pline.rings import (
    BUNDLED_RINGS,
    FiniteRing,
    PolyRing,
    is_field,
    parse_ring_arg,
    ring,
    ring_create,
    spec_from_json,
    spec_to_json,
)


def test_zn_basics():
    R = ring({"type": "Zn", "n": 4})
    assert R.size == 4 and R.add(1, 1) == 2
    assert R.is_unit(3) and R.unit_inverse(3) == 3
    assert not R.is_unit(2)
    assert R.units() == [1, 3]
    with pytest.raises(DomainError):
        R.unit_inverse(2)


def test_dual_numbers():
    R = ring({"type": "quotientpoly", "base": {"type": "Zn", "n": 2}, "modulus": [0, 0, 1]})
    eps = R.from_json([0, 1])
    assert R.mul(eps, eps) == R.zero
    assert R.size == 4


def test_gf4():
    R = ring({"type": "quotientpoly", "base": {"type": "Zn", "n": 2}, "modulus": [1, 1, 1]})
    assert len(R.units()) == 3
    assert is_field(R)


def test_units_of_fields_and_trivial_ring():
    assert ring("F5").units() == [1, 2, 3, 4]
    Z1 = ring("Z/1")
    assert Z1.trivial and Z1.units() == [0]


def test_matrix_ring_unit():
    M = ring("M2(F2)")
    a = M.from_json([[1, 1], [0, 1]])
    assert M.is_unit(a)
    assert M.mul(a, M.unit_inverse(a)) == M.one == M.mul(M.unit_inverse(a), a)
    assert not M.commutative


@pytest.mark.parametrize(
    "bad",
    [
        {"type": "Zn", "n": 0},
        {"type": "quotientpoly", "base": {"type": "Zn", "n": 2}, "modulus": [1, 1, 0]},
        {"type": "quotientpoly", "base": {"type": "Zn", "n": 2}, "modulus": [1]},
        {"type": "matrix", "base": {"type": "Zn", "n": 2}, "dim": 3},
        {"type": "product", "factors": []},
        {"type": "nope"},
    ],
)
def test_malformed_specs(bad):
    with pytest.raises(SpecError):
        ring_create(spec_from_json(bad))


@pytest.mark.parametrize("name", BUNDLED_RINGS + ("F3[X]", "F2[X1,X2]"))
def test_spec_json_round_trip(name):
    spec = parse_ring_arg(name)
    again = spec_from_json(json.loads(json.dumps(spec_to_json(spec))))
    assert again == spec
    assert ring(name) is ring(again)


@pytest.mark.parametrize("name", TEST_RINGS)
def test_index_convention(name):
    R = ring(name)
    assert R.zero == 0
    if not R.trivial:
        assert R.one == 1


@pytest.mark.parametrize("name", TEST_RINGS)
def test_ring_axioms_exhaustive(name):
    R = ring(name)
    t = R.tables
    els = range(R.size)
    for a in els:
        assert t.add[a, 0] == a and t.mul[a, R.one] == a == t.mul[R.one, a]
        assert t.add[a, t.neg[a]] == 0
    for a, b, c in itertools.product(els, repeat=3):
        assert t.mul[t.mul[a, b], c] == t.mul[a, t.mul[b, c]]
        assert t.add[t.add[a, b], c] == t.add[a, t.add[b, c]]
        assert t.mul[a, t.add[b, c]] == t.add[t.mul[a, b], t.mul[a, c]]
        assert t.mul[t.add[a, b], c] == t.add[t.mul[a, c], t.mul[b, c]]


@pytest.mark.parametrize("name", TEST_RINGS)
def test_is_unit_matches_inverse_search(name):
    R = ring(name)
    for a in R.elements():
        two_sided = any(R.mul(a, b) == R.one and R.mul(b, a) == R.one for b in R.elements())
        assert R.is_unit(a) == two_sided


def test_product_units():
    R = ring("F2 x F2")
    F2 = ring("F2")
    for a in R.elements():
        x, y = R.to_json(a)
        assert R.is_unit(a) == (F2.is_unit(x) and F2.is_unit(y))


def test_shorthand():
    assert ring("GF(4)") is ring("F4")
    assert isinstance(ring("F3[X]"), PolyRing)
    assert isinstance(ring("Z/6"), FiniteRing)
    with pytest.raises(SpecError):
        parse_ring_arg("Q[X]")


def test_poly_ring_is_not_enumerable():
    with pytest.raises(CapabilityError):
        ring("F2[X]").units()


def test_elem_wrapper():
    R = ring("Z/4")
    assert R(3) * R(3) == R(1)
    assert R(2) != ring("Z/6")(2)
