import io

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from oracles import decode_graph6, encode_graph6
from toughham.errors import MalformedGraph6, TooLarge
from toughham.graph import Graph, complete, empty, petersen, random_gnp
from toughham.graph6 import parse_graph6, read_graph6_stream, write_graph6, write_graph6_stream


def test_small_codes():
    assert write_graph6(complete(3)) == b"Bw"
    assert write_graph6(empty(0)) == b"?"
    assert parse_graph6("@") == empty(1)
    assert parse_graph6(b">>graph6<<Bw\n") == complete(3)


def test_d_question_brace_roundtrip():
    g = parse_graph6("D?{")
    assert write_graph6(g) == b"D?{"
    n, edges = decode_graph6("D?{")
    assert Graph.from_edges(n, edges) == g
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_petersen_roundtrip():
    code = write_graph6(petersen())
    assert code[:1] == b"I"
    assert parse_graph6(code) == petersen()


@pytest.mark.parametrize("bad", ["D~{\t", "D~", "D~{{", "", "Bx", "A@"])
def test_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_too_large():
    big = nx.to_graph6_bytes(nx.empty_graph(65), header=False).strip()
    with pytest.raises(TooLarge):
        parse_graph6(big)


@pytest.mark.parametrize("n", [62, 63, 64])
def test_size_prefix_matches_networkx(n):
    g = random_gnp(n, "1/3", n)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(g.edges())
    ours = write_graph6(g)
    assert ours == nx.to_graph6_bytes(G, header=False).strip()
    assert parse_graph6(ours) == g


def test_stream_roundtrip():
    gs = [complete(4), petersen(), empty(2)]
    buf = io.BytesIO()
    assert write_graph6_stream(gs, buf) == 3
    buf.seek(0)
    assert list(read_graph6_stream(buf)) == gs


@given(graphs(max_n=12))
def test_roundtrip_against_reference(g):
    code = write_graph6(g)
    assert code.decode() == encode_graph6(g.n, g.edges())
    n, edges = decode_graph6(code.decode())
    assert Graph.from_edges(n, edges) == g
    assert parse_graph6(code) == g
