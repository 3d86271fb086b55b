import os
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, strategies as st

from conftest import graphs
from oracles import brute_alpha, brute_connectivity, brute_has_p2kp1, brute_toughness, count_components, graph_data
from toughham.errors import CapExceeded, EmptyGraph, ValidationFailure
from toughham.graph import (
    Graph,
    VertexSet,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    forbidden_pattern,
    path,
    petersen,
    random_gnp,
)
from toughham.structure import (
    FreenessWitness,
    cut_ratio,
    find_induced,
    find_p2kp1,
    format_ratio,
    independence_number,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    min_degree,
    minimum_vertex_cut,
    parse_ratio,
    solver_cap,
    toughness,
    validate_freeness_witness,
    vertex_connectivity,
)


def test_min_degree_examples():
    assert min_degree(petersen()) == 3
    assert min_degree(complete(5)) == 4
    assert min_degree(disjoint_union(path(2), path(1))) == 0
    with pytest.raises(EmptyGraph):
        min_degree(empty(0))


def test_connectivity_examples():
    assert vertex_connectivity(complete_bipartite(4, 5)) == 4
    assert vertex_connectivity(cycle(6)) == 2
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(complete(6)) == 5
    assert vertex_connectivity(disjoint_union(path(2), path(2))) == 0
    cut = minimum_vertex_cut(petersen())
    assert len(cut) == 3 and cut_ratio(petersen(), cut)[0] >= 2
    assert minimum_vertex_cut(complete(4)) is None


def test_is_k_connected_boundaries():
    g = complete_bipartite(4, 5)
    assert is_k_connected(g, 4) and not is_k_connected(g, 5)
    assert is_k_connected(complete(5), 4) and not is_k_connected(complete(5), 5)
    assert is_k_connected(empty(1), 0)


def test_independence_examples():
    assert independence_number(complete(7))[0] == 1
    assert independence_number(cycle(7))[0] == 3
    size, w = independence_number(petersen())
    assert size == 4 and petersen().is_independent(w)
    assert independence_number(cycle(6))[1] == VertexSet([0, 2, 4])


def test_toughness_examples():
    assert toughness(complete(6)).value is None
    r = toughness(complete_bipartite(4, 5))
    assert r.value == Fraction(4, 5) and r.witness == VertexSet([0, 1, 2, 3]) and r.components == 5
    assert toughness(petersen()).value == Fraction(4, 3)
    assert toughness(cycle(8)).value == 1
    assert str(toughness(petersen())) == "4/3"
    assert str(toughness(complete(3))) == "inf"
    assert toughness(empty(3)).value == 0
    with pytest.raises(EmptyGraph):
        toughness(empty(0))


def test_is_t_tough_examples():
    assert is_t_tough(petersen(), 1)
    check = is_t_tough(petersen(), Fraction(3, 2))
    assert not check
    assert (len(check.cutset), check.components) == (4, 3)
    assert len(check.cutset) < Fraction(3, 2) * check.components
    assert cut_ratio(petersen(), check.cutset) == (check.components, check.ratio)
    assert is_t_tough(complete(4), 100)
    assert is_t_tough(petersen(), "4/3") and not is_t_tough(petersen(), "41/30")


def test_toughness_cap(monkeypatch):
    g = random_gnp(21, "1/2", 1)
    with pytest.raises(CapExceeded) as err:
        toughness(g)
    assert "TOUGHHAM_CAP_N" in str(err.value)
    monkeypatch.setenv("TOUGHHAM_CAP_N", "30")
    assert solver_cap("toughness") == 30


def test_ratio_format():
    assert format_ratio(Fraction(4, 1)) == "4/1"
    assert format_ratio(None) == "inf"
    assert parse_ratio("8/10") == Fraction(4, 5)
    assert parse_ratio("inf") is None


def test_freeness_examples():
    for k in (1, 2, 3, 4, 5):
        assert is_p2kp1_free(complete_bipartite(4, 5), k)
    pat = forbidden_pattern(4)
    w = find_p2kp1(pat, 4)
    assert w.edge == (0, 1) and w.isolated == VertexSet([2, 3, 4, 5])
    w = find_p2kp1(cycle(9), 2)
    validate_freeness_witness(cycle(9), w, 2)
    assert w.edge == (0, 1) and w.isolated == VertexSet([3, 5])


def test_find_induced_examples():
    phi = find_induced(petersen(), path(3))
    assert phi is not None
    image = [phi[i] for i in range(3)]
    g = petersen()
    assert g.has_edge(image[0], image[1]) and g.has_edge(image[1], image[2]) and not g.has_edge(image[0], image[2])
    assert find_induced(complete(5), empty(2)) is None
    assert find_induced(petersen(), empty(0)) == {}


def test_witness_validator_rejects_bad():
    g = cycle(9)
    for w in (
        FreenessWitness((0, 2), VertexSet([4, 6])),
        FreenessWitness((0, 1), VertexSet([2, 5])),
        FreenessWitness((0, 1), VertexSet([4, 5])),
        FreenessWitness((0, 1), VertexSet([4])),
    ):
        with pytest.raises(ValidationFailure):
            validate_freeness_witness(g, w, 2)


def nx_graph(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@given(graphs(min_n=1, max_n=9))
def test_toughness_matches_brute_force(g):
    n, adj = graph_data(g)
    value, witness = brute_toughness(n, adj)
    r = toughness(g)
    assert r.value == value
    if value is not None:
        assert r.witness.to_list() == witness
        assert count_components(adj, set(range(n)) - set(witness)) == r.components


@given(graphs(min_n=1, max_n=9))
def test_alpha_and_kappa_match_brute_force(g):
    n, adj = graph_data(g)
    size, witness = brute_alpha(n, adj)
    ours = independence_number(g)
    assert ours[0] == size and ours[1].to_list() == witness
    assert vertex_connectivity(g) == brute_connectivity(n, adj)
    if g.n >= 2:
        assert vertex_connectivity(g) == nx.node_connectivity(nx_graph(g))


@given(graphs(min_n=1, max_n=9), st.integers(1, 3))
def test_freeness_matches_brute_force(g, k):
    n, adj = graph_data(g)
    assert is_p2kp1_free(g, k) == (not brute_has_p2kp1(n, adj, k))
    assert is_p2kp1_free(g, k) == (find_induced(g, forbidden_pattern(k)) is None)
    w = find_p2kp1(g, k)
    if w is not None:
        validate_freeness_witness(g, w, k)


@given(graphs(min_n=2, max_n=9), st.fractions(0, 5, max_denominator=6), st.fractions(0, 5, max_denominator=6))
def test_t_tough_monotone_and_witnessed(g, t1, t2):
    lo, hi = sorted((t1, t2))
    c_hi, c_lo = is_t_tough(g, hi), is_t_tough(g, lo)
    if c_hi:
        assert c_lo
    r = toughness(g)
    assert bool(c_hi) == r.at_least(hi)
    if not c_hi:
        comps, ratio = cut_ratio(g, c_hi.cutset)
        assert comps == c_hi.components and ratio < hi


@given(graphs(min_n=3, max_n=9))
def test_kappa_at_least_twice_toughness(g):
    assume(not g.is_complete())
    assert vertex_connectivity(g) >= 2 * toughness(g).value


@given(graphs(min_n=2, max_n=12), st.integers(0, 6))
def test_is_k_connected_consistent(g, k):
    assert is_k_connected(g, k) == (vertex_connectivity(g) >= k)
