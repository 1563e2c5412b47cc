from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs
from edgelab.errors import CapacityError, DomainError
from edgelab.extremal import build_J
from edgelab.graph import Graph
from edgelab.matching import (
    has_perfect_matching,
    is_factor_critical,
    iter_maximum_matchings,
    matching_number,
    max_matching,
    max_matching_bruteforce,
)
from oracles import matching_nx


@pytest.mark.parametrize(
    "g, size",
    [(Graph.complete(4), 2), (Graph.cycle(5), 2), (Graph.petersen(), 5), (Graph.path(3), 1), (build_J(3), 2)],
)
def test_matching_examples(g, size):
    m = max_matching(g)
    assert m.size == size and m.is_valid_for(g)
    assert max_matching_bruteforce(g) == size
    assert matching_nx(g) == size


def test_perfect_matching_examples():
    assert has_perfect_matching(Graph.complete(4))
    assert not has_perfect_matching(Graph.complete(3))
    assert has_perfect_matching(Graph.cycle(4))


def test_factor_critical_examples():
    assert is_factor_critical(Graph.cycle(5))
    assert not is_factor_critical(Graph.path(3))
    assert is_factor_critical(build_J(3))
    assert is_factor_critical(build_J(3), bruteforce=True)
    assert is_factor_critical(Graph.empty(1))
    assert not is_factor_critical(Graph.empty(3))
    with pytest.raises(DomainError):
        is_factor_critical(Graph.empty(0))


@given(graphs(max_n=12))
def test_blossom_agrees_with_bruteforce_and_networkx(g):
    m = max_matching(g)
    assert m.is_valid_for(g)
    assert m.size == max_matching_bruteforce(g) == matching_nx(g)


@given(graphs(max_n=8))
def test_enumerated_maximum_matchings_are_valid(g):
    nu = matching_number(g)
    seen = set()
    for m in iter_maximum_matchings(g):
        assert m.size == nu and m.is_valid_for(g)
        assert m.edges not in seen
        seen.add(m.edges)
    assert seen


def test_caps():
    with pytest.raises(CapacityError):
        max_matching_bruteforce(Graph.empty(17))
    with pytest.raises(CapacityError):
        next(iter_maximum_matchings(Graph.empty(13)))
