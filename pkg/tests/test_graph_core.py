import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from kitespec.graph import (
    Graph,
    Graph6Error,
    GraphError,
    KiteParams,
    SpecParseError,
    clique_number,
    decode_graph6,
    encode_graph6,
    from_edges,
    is_connected,
    make_complete,
    make_cycle,
    make_gb,
    make_gc,
    make_kite,
    make_knm,
    make_path,
    make_star,
    parse_graph_spec,
    triangle_count,
)

from conftest import random_graph


def brute_force_clique(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(i, j) for i, j in itertools.combinations(sub, 2)):
                return size
    return best


class TestKiteConstruction:
    def test_kite_3_0_is_triangle(self):
        g = make_kite(KiteParams(3, 0))
        assert (g.n, g.edge_count()) == (3, 3)
        assert g == make_complete(3)

    def test_kite_4_2_counts(self):
        g = make_kite(p=4, q=2)
        assert (g.n, g.edge_count()) == (6, 8)

    def test_paw(self):
        g = make_kite(p=3, q=1)
        assert g.edge_count() == 4
        assert triangle_count(g) == 1
        assert sorted(g.degree(v) for v in range(4)) == [1, 2, 2, 3]

    def test_degenerate_conventions(self):
        assert make_kite(p=1, q=3) == make_path(4)
        assert make_kite(p=2, q=2) == make_path(4)
        assert make_kite(p=5, q=0) == make_complete(5)

    def test_cap_exceeded(self):
        with pytest.raises(GraphError):
            make_kite(p=20, q=10)

    @pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 9) for q in range(0, 5)])
    def test_edge_and_triangle_formulas(self, p, q):
        g = make_kite(p=p, q=q)
        assert g.edge_count() == comb(p, 2) + q
        assert triangle_count(g) == comb(p, 3)

    @pytest.mark.parametrize("p", range(2, 9))
    def test_clique_number_of_kites(self, p):
        assert clique_number(make_kite(p=p, q=0)) == p
        for q in (1, 2, 3):
            assert clique_number(make_kite(p=p, q=q)) == max(p, 2)


class TestFamilies:
    def test_knm(self):
        g = make_knm(6, 2)
        assert (g.n, g.edge_count()) == (6, 8)
        assert clique_number(g) == 4
        assert sorted(g.degree(v) for v in range(6)) == [1, 1, 3, 3, 3, 5]
        with pytest.raises(GraphError):
            make_knm(4, 4)

    def test_gb_equals_knm(self):
        assert make_gb(4) == make_knm(6, 2)

    def test_gc(self):
        g = make_gc(4)
        assert (g.n, g.edge_count()) == (6, 8)
        assert clique_number(g) == 4
        # pendants on two distinct clique vertices
        assert sorted(g.degree(v) for v in range(6)) == [1, 1, 3, 3, 4, 4]

    def test_path_identity_case(self):
        g = make_path(1)
        assert (g.n, g.edge_count()) == (1, 0)


class TestStructuralInvariants:
    def test_triangle_counts(self):
        assert triangle_count(make_kite(p=4, q=2)) == 4
        assert triangle_count(make_complete(5)) == comb(5, 3)
        assert triangle_count(make_path(7)) == 0

    def test_triangle_count_equals_walk_formula(self, rng):
        from kitespec.charpoly import walk_count

        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 10))
            assert 6 * triangle_count(g) == walk_count(g, 3)

    def test_clique_number_known(self):
        assert clique_number(make_kite(p=7, q=2)) == 7
        assert clique_number(make_cycle(5)) == 2
        assert clique_number(make_gc(4)) == 4

    def test_clique_number_against_brute_force(self, rng):
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 7))
            assert clique_number(g) == brute_force_clique(g)

    def test_connectivity(self):
        assert is_connected(make_kite(p=5, q=3))
        assert not is_connected(from_edges(4, [(0, 1), (1, 2), (0, 2)]))
        assert is_connected(Graph(1, (0,)))
        assert is_connected(Graph(0, ()))


class TestGraph6:
    def test_known_encodings(self):
        assert encode_graph6(make_complete(3)) == "Bw"
        assert encode_graph6(make_path(3)) == "Bg"
        assert encode_graph6(make_complete(1)) == "@"

    def test_decode_known(self):
        assert decode_graph6("Bw") == make_complete(3)
        assert decode_graph6(b"Bg") == make_path(3)

    @given(st.data())
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, data):
        n = data.draw(st.integers(min_value=1, max_value=12))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
        g = from_edges(n, edges)
        assert decode_graph6(encode_graph6(g)) == g

    def test_round_trip_bulk(self, rng):
        for n in range(1, 13):
            for _ in range(100):
                g = random_graph(rng, n)
                assert decode_graph6(encode_graph6(g)) == g

    @pytest.mark.parametrize(
        "bad", ["", "\x1fw", "B", "Bww", "B\x07", chr(126) + "abc"]
    )
    def test_malformed_inputs(self, bad):
        with pytest.raises(Graph6Error):
            decode_graph6(bad)


class TestSpecGrammar:
    @pytest.mark.parametrize(
        "raw,n,m",
        [
            ("kite:4,2", 6, 8),
            ("path:5", 5, 4),
            ("complete:4", 4, 6),
            ("knm:6,2", 6, 8),
            ("gb:4", 6, 8),
            ("gc:4", 6, 8),
            ("g6:Bw", 3, 3),
        ],
    )
    def test_valid_specs(self, raw, n, m):
        g = parse_graph_spec(raw)
        assert (g.n, g.edge_count()) == (n, m)

    @pytest.mark.parametrize(
        "raw", ["kite", "kite:1", "kite:a,b", "blob:3", "knm:3,5", "g6:", "path:x"]
    )
    def test_invalid_specs(self, raw):
        with pytest.raises(SpecParseError) as ei:
            parse_graph_spec(raw)
        assert ei.value.pos >= 0


class TestGraphValidation:
    def test_rejects_asymmetry(self):
        with pytest.raises(GraphError):
            Graph(2, (2, 0))

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            from_edges(2, [(0, 0)])

    def test_rejects_over_cap(self):
        with pytest.raises(GraphError):
            make_path(25)

    def test_relabel_roundtrip(self, rng):
        for _ in range(50):
            g = random_graph(rng, 6)
            perm = list(range(6))
            rng.shuffle(perm)
            h = g.relabel(perm)
            assert sorted(h.degree_sequence()) == sorted(g.degree_sequence())
            inv = [perm.index(k) for k in range(6)]
            assert h.relabel(inv) == g
