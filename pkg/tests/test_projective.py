import itertools
import json
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TEST_RINGS
from pline import oracles
from pline.errors import CapabilityError, DomainError, PreconditionError
from pline.groups import gl2_enumerate
from pline.mat2 import gen_E
from pline.projective import (
    DistantGraph,
    base_point,
    build_graph,
    chain_to_word,
    distant,
    enumerate_points,
    is_admissible,
    point_make,
    projective_line,
    unimodular_vs_admissible_report,
    word_to_point,
)
from pline.rings import BUNDLED_RINGS, ring
from pline.verify import random_chain


def test_admissibility_examples():
    R = ring("Z/4")
    assert is_admissible(R, 1, 0)
    assert not is_admissible(R, 2, 2)
    assert is_admissible(R, 2, 3)
    for name in TEST_RINGS:
        S = ring(name)
        assert is_admissible(S, S.one, S.zero)


def test_admissibility_over_polynomials():
    R = ring("F3[X]")
    X = R.parse("X")
    assert is_admissible(R, X, R.parse("X+1"))
    assert not is_admissible(R, X, X * X)


def test_point_examples():
    R = ring("Z/4")
    assert point_make(R, 3, 0) == point_make(R, 1, 0)
    assert point_make(R, 0, 1) != point_make(R, 1, 0)
    with pytest.raises(DomainError):
        point_make(R, 2, 2)
    Z1 = ring("Z/1")
    assert len(enumerate_points(Z1)) == 1


def test_point_counts():
    assert [p.label for p in enumerate_points(ring("F2"))] == ["R(0,1)", "R(1,0)", "R(1,1)"]
    assert len(enumerate_points(ring("Z/4"))) == 6
    assert len(enumerate_points(ring("F2[e]"))) == 6


def test_enumeration_needs_finite_ring():
    with pytest.raises(CapabilityError):
        enumerate_points(ring("F2[X]"))


@pytest.mark.parametrize("name", TEST_RINGS)
def test_points_match_oracle(name):
    R = ring(name)
    mine = {oracles.point_class(R, p.a, p.b) for p in enumerate_points(R)}
    assert mine == set(oracles.points(R))


def test_distant_examples():
    R = ring("Z/4")
    p0, p1 = point_make(R, 1, 0), point_make(R, 0, 1)
    assert distant(p0, p1)
    assert not distant(p0, point_make(R, 1, 2))
    assert not distant(p0, p0)
    with pytest.raises(DomainError):
        distant(p0, point_make(ring("F2"), 1, 0))


def test_trivial_ring_is_reflexive():
    R = ring("Z/1")
    p = base_point(R)
    assert distant(p, p)
    g = build_graph(R)
    assert len(g) == 1 and g.diameter() == 0 and g.is_connected()


def test_representative_independence():
    R = ring("Z/4")
    pts = enumerate_points(R)
    for p, q in itertools.product(pts, repeat=2):
        want = distant(p, q)
        for u, v in itertools.product(R.units(), repeat=2):
            pa, pb = R.mul(u, p.a), R.mul(u, p.b)
            qa, qb = R.mul(v, q.a), R.mul(v, q.b)
            assert oracles.invertible(R, pa, pb, qa, qb) == want


@pytest.mark.parametrize("name", TEST_RINGS)
def test_graph_symmetric_and_loopless(name):
    g = build_graph(ring(name))
    assert (g.adjacency == g.adjacency.T).all()
    if not g.ring.trivial:
        assert not g.adjacency.diagonal().any()


def test_graph_examples():
    g = build_graph(ring("F3"))
    assert len(g) == 4 and len(g.edges()) == 6 and g.diameter() == 1
    g = build_graph(ring("Z/4"))
    assert g.is_connected() and g.diameter() == 2
    assert g.dist(base_point(g.ring), point_make(g.ring, 1, 2)) == 2


def test_graph_exports():
    g = build_graph(ring("Z/4"))
    d = json.loads(g.to_json())
    assert set(d) == {"ring", "points", "edges", "components", "diameters"}
    assert len(d["points"]) == 6 and d["diameters"] == [2]
    dot = g.to_dot()
    assert dot.count(" -- ") == len(g.edges()) and 'label="R(1,0)"' in dot
    assert g.to_json() == build_graph(ring("Z/4")).to_json()


def test_distance_across_components_is_infinite():
    # finite rings are connected, so split a copy of the F2 graph by hand
    g = DistantGraph(projective_line(ring("F2")))
    g.distances = g.distances.copy()
    g.distances[0, 1] = g.distances[1, 0] = -1
    assert math.isinf(g.dist(g.points[0], g.points[1]))
    assert g.dist(g.points[0], g.points[2]) == 1


@pytest.mark.parametrize("name", ["Z/4", "F2[e]"])
def test_gl2_invariance_of_distance(name):
    R = ring(name)
    g = build_graph(R)
    gl2 = gl2_enumerate(R)
    rnd = random.Random(3)
    for G in rnd.sample(gl2, 40):
        for p, q in itertools.product(g.points, repeat=2):
            assert g.dist(p.act(G), q.act(G)) == g.dist(p, q)


def test_word_to_point_examples():
    R = ring("Z/4")
    assert word_to_point(R, [])[0] == base_point(R)
    for t in R.elements():
        assert word_to_point(R, [t])[0] == point_make(R, t, 1)
    assert word_to_point(R, [0, 0])[0] == base_point(R)


@pytest.mark.parametrize("name", TEST_RINGS)
@given(data=st.data())
def test_prefix_trace_is_distant(name, data):
    R = ring(name)
    word = data.draw(st.lists(st.integers(0, R.size - 1), max_size=6))
    end, trace = word_to_point(R, word)
    assert trace[0] == base_point(R) and trace[-1] == end
    assert all(distant(p, q) for p, q in zip(trace, trace[1:]))


def test_chain_to_word_examples():
    R = ring("Z/4")
    p0 = base_point(R)
    assert chain_to_word([p0]) == ()
    assert chain_to_word([p0, point_make(R, 0, 1)]) == (0,)
    with pytest.raises(PreconditionError):
        chain_to_word([point_make(R, 0, 1)])
    with pytest.raises(PreconditionError):
        chain_to_word([p0, point_make(R, 1, 2)])


@pytest.mark.parametrize("name", ["Z/4", "F2[e]", "F3[e]", "M2(F2)", "F2 x F2"])
@given(seed=st.integers(0, 2**32 - 1), steps=st.integers(0, 5))
def test_chain_round_trip(name, seed, steps):
    R = ring(name)
    chain = random_chain(R, steps, random.Random(seed))
    end, trace = word_to_point(R, chain_to_word(chain))
    assert trace == chain


def test_chain_to_word_matches_E_action():
    R = ring("F3")
    chain = [base_point(R), point_make(R, 2, 1)]
    (t,) = chain_to_word(chain)
    assert base_point(R).act(gen_E(R, t)) == chain[1]


@pytest.mark.parametrize("name", BUNDLED_RINGS)
def test_unimodular_vs_admissible(name):
    rep = unimodular_vs_admissible_report(ring(name))
    assert rep.unimodular_implies_admissible
    if ring(name).commutative or ring(name).stable_rank_two:
        assert rep.equivalent and not rep.counterexamples


def test_unimodular_count_z4():
    rep = unimodular_vs_admissible_report(ring("Z/4"))
    assert rep.admissible == 12 == rep.unimodular
