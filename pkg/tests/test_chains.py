import pytest

from pline.chains import (
    SubfieldError,
    base_chain,
    chain_component_containment,
    enumerate_chains,
    subfield_check,
    verify_chain_axioms,
)
from pline.errors import BudgetError
from pline.groups import Budget
from pline.projective import build_graph, distant
from pline.rings import ring
from pline.verify import CHAIN_GEOMETRIES, subfield_from_values


def test_subfield_examples():
    R = ring("F2[e]")
    assert len(subfield_check(R, [R.zero, R.one])) == 2
    M = ring("M2(F2)")
    assert len(subfield_from_values(M, [[[0, 0], [0, 0]], [[1, 0], [0, 1]]])) == 2
    Z4 = ring("Z/4")
    with pytest.raises(SubfieldError, match="1\\+1 = 2"):
        subfield_check(Z4, [0, 1])


def test_subfield_violations():
    R = ring("F2[e]")
    eps = R.from_json([0, 1])
    with pytest.raises(SubfieldError) as info:
        subfield_check(R, [R.zero, R.one, eps, R.add(R.one, eps)])
    assert info.value.axiom == "nonzero elements are units"
    with pytest.raises(SubfieldError, match="contains 1"):
        subfield_check(R, [R.zero])
    with pytest.raises(SubfieldError):
        subfield_check(ring("Z/1"), [0])
    with pytest.raises(SubfieldError):
        subfield_check(ring("F2[X]"), [])


def test_single_chain_over_field():
    R = ring("F2")
    k = subfield_check(R, [0, 1])
    chains = enumerate_chains(R, k)
    assert len(chains) == 1 and len(chains[0]) == 3
    assert verify_chain_axioms(R, k).ok


def test_base_chain_is_enumerated():
    R = ring("F3[e]")
    k = subfield_from_values(R, [0, [1, 0], [2, 0]])
    base = frozenset(base_chain(k))
    assert any(c.points == base for c in enumerate_chains(R, k))


@pytest.mark.parametrize("name,values", CHAIN_GEOMETRIES)
def test_chain_invariants(name, values):
    R = ring(name)
    k = subfield_from_values(R, values)
    chains = enumerate_chains(R, k)
    g = build_graph(R)
    for c in chains:
        assert len(c) == len(k) + 1
        pts = sorted(c.points, key=g.index)
        assert all(distant(p, q) for i, p in enumerate(pts) for q in pts[i + 1 :])
        assert frozenset(p.act(c.witness) for p in base_chain(k)) == c.points
    rep = verify_chain_axioms(R, k)
    assert rep.ok and not rep.triple_counterexamples and not rep.pair_counterexamples
    assert chain_component_containment(R, k)["contained"]


def test_chain_budget():
    R = ring("M2(F2)")
    k = subfield_from_values(R, [[[0, 0], [0, 0]], [[1, 0], [0, 1]]])
    with pytest.raises(BudgetError):
        enumerate_chains(R, k, Budget(ring_size=8))
