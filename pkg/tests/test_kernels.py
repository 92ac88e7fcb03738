"""The compiled and numpy kernels must agree on every ring in the test set."""

import numpy as np
import pytest

from conftest import TEST_RINGS
from pline import kernels
from pline.groups import e2_generators
from pline.projective import projective_line
from pline.rings import ring

BACKENDS = kernels.available_backends()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")


def _args(R):
    t = R.tables
    return t.add, t.mul, t.neg, t.unit, t.commutative


def test_backend_selection():
    assert kernels.BACKEND in BACKENDS
    assert kernels.backend is BACKENDS[kernels.BACKEND]


@needs_both
@pytest.mark.parametrize("name", TEST_RINGS)
def test_parity(name):
    R = ring(name)
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    np.testing.assert_array_equal(py.gl2_codes(*_args(R)), cy.gl2_codes(*_args(R)))
    np.testing.assert_array_equal(py.admissible_mask(*_args(R)), cy.admissible_mask(*_args(R)))
    np.testing.assert_array_equal(py.unimodular_mask(R.tables.add, R.tables.mul), cy.unimodular_mask(R.tables.add, R.tables.mul))
    pairs = projective_line(R).pairs_array()
    adj_py = py.distant_matrix(*_args(R), pairs)
    adj_cy = cy.distant_matrix(*_args(R), pairs)
    np.testing.assert_array_equal(np.asarray(adj_py, dtype=bool), np.asarray(adj_cy, dtype=bool))
    adj = np.asarray(adj_py, dtype=np.uint8)
    np.testing.assert_array_equal(py.bfs_distances(adj), cy.bfs_distances(adj))
    gens = np.array([g.entries for g in e2_generators(R)], dtype=np.int64)
    np.testing.assert_array_equal(
        py.group_closure(R.tables.add, R.tables.mul, gens, 10**6), cy.group_closure(R.tables.add, R.tables.mul, gens, 10**6)
    )
    np.testing.assert_array_equal(
        py.act_on_pairs(R.tables.add, R.tables.mul, pairs, gens), cy.act_on_pairs(R.tables.add, R.tables.mul, pairs, gens)
    )


@needs_both
def test_invertible_many_parity():
    R = ring("M2(F2)")
    rng = np.random.default_rng(0)
    mats = rng.integers(0, R.size, size=(500, 4)).astype(np.int64)
    py = BACKENDS["python"].invertible_many(*_args(R), mats)
    cy = BACKENDS["cython"].invertible_many(*_args(R), mats)
    np.testing.assert_array_equal(np.asarray(py, dtype=bool), np.asarray(cy, dtype=bool))


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_closure_limit(backend):
    R = ring("Z/4")
    gens = np.array([g.entries for g in e2_generators(R)], dtype=np.int64)
    with pytest.raises(OverflowError):
        BACKENDS[backend].group_closure(R.tables.add, R.tables.mul, gens, 10)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_bfs_unreachable(backend):
    adj = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=np.uint8)
    d = BACKENDS[backend].bfs_distances(adj)
    assert d[0, 1] == 1 and d[0, 2] == -1 and d[2, 2] == 0
