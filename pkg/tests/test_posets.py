from math import comb

import pytest
from hypothesis import given, strategies as st

from cellposet.constructions import boundary_of_simplex, parallel_edges_graph
from cellposet.graphs import ColoredGraph
from cellposet.posets import (SimplicialPoset, f_from_h, f_vector, from_graph,
                              h_vector, induced_coloring, is_normal,
                              is_pseudomanifold, is_pure, link,
                              poset_from_json, poset_to_json, proper_coloring,
                              to_graph, validate_poset)

from conftest import admissible_graphs


def h_by_polynomial_expansion(f):
    """Oracle: literally expand sum_i f_i t^i (1-t)^(d-i) by convolution."""
    d = len(f) - 1
    total = [0] * (d + 1)
    for i, fi in enumerate(f):
        poly = [0] * i + [fi]          # f_i t^i
        for _ in range(d - i):         # times (1 - t)
            poly = [a - b for a, b in zip(poly + [0], [0] + poly)]
        for k, c in enumerate(poly):
            total[k] += c
    return tuple(total)


class TestFromGraph:
    def test_torus_f_vector(self, torus_graph):
        assert f_vector(from_graph(torus_graph)) == (1, 3, 9, 6)

    def test_facets_and_ridges_count_the_graph(self, torus_graph):
        p = from_graph(torus_graph)
        assert len(p.cells_by_rank[3]) == len(torus_graph.vertices)
        assert len(p.cells_by_rank[2]) == len(torus_graph.edges)

    def test_two_vertex_graph_gives_two_facet_sphere(self):
        for d in (2, 3, 4):
            p = from_graph(parallel_edges_graph(d))
            f = f_vector(p)
            assert f[d] == 2
            assert f[:d] == tuple(comb(d, k) for k in range(d))

    def test_rank_is_colors_minus_subset_size(self, torus_graph):
        p = from_graph(torus_graph)
        for c in range(p.n_cells):
            s, _ = p.origins[c]
            assert p.ranks[c] == p.d - len(s)

    def test_boolean_intervals(self, torus_graph):
        assert validate_poset(from_graph(torus_graph)) == []

    def test_rejects_inadmissible(self):
        g = ColoredGraph(2, ("a", "b"), (("a", "b", 1),))
        with pytest.raises(ValueError, match="not admissible"):
            from_graph(g)

    @given(admissible_graphs())
    def test_random_graphs_give_normal_pseudomanifolds(self, g):
        p = from_graph(g)
        assert validate_poset(p) == []
        assert is_normal(p)
        assert len(p.cells_by_rank[p.d]) == len(g.vertices)
        assert len(p.cells_by_rank[p.d - 1]) == len(g.edges)


class TestHVector:
    def test_torus_values(self):
        assert h_vector((1, 3, 9, 6)) == (1, 0, 6, -1)

    def test_point(self):
        assert h_vector((1,)) == (1,)

    def test_simplex_boundary_by_hand_expansion(self):
        f = (1, 4, 6, 4)
        assert h_by_polynomial_expansion(f) == (1, 1, 1, 1)
        assert h_vector(f) == (1, 1, 1, 1)

    def test_inverse_transform(self):
        assert f_from_h((1, 0, 6, -1)) == (1, 3, 9, 6)

    @given(st.lists(st.integers(min_value=0, max_value=50), min_size=0, max_size=7))
    def test_matches_polynomial_oracle_and_round_trips(self, tail):
        f = (1, *tail)
        h = h_vector(f)
        assert h == h_by_polynomial_expansion(f)
        assert f_from_h(h) == f
        assert sum(h) == f[-1]

    def test_requires_leading_one(self):
        with pytest.raises(ValueError):
            h_vector((2, 3))


class TestLink:
    def test_link_of_minimum_is_the_poset(self, torus_graph):
        p = from_graph(torus_graph)
        lk = link(p, 0)
        assert lk.ranks == p.ranks and lk.covers == p.covers

    def test_torus_vertex_links_are_cycles(self, torus_graph):
        p = from_graph(torus_graph)
        for v in p.cells_by_rank[1]:
            f = f_vector(link(p, v))
            assert len(f) == 3 and f[1] == f[2] and f[1] >= 3

    def test_link_in_graph_poset_is_the_component_poset(self, torus_graph):
        p = from_graph(torus_graph)
        # pick a rank-1 cell: component H of a 2-color restriction
        v = p.cells_by_rank[1][0]
        s, root = p.origins[v]
        sub = torus_graph.restrict(s)
        comp = next(c for c in sub.components(s) if root in c)
        relabel = {c: i + 1 for i, c in enumerate(sorted(s))}
        edges = tuple((u, w, relabel[c]) for u, w, c in sub.edges
                      if u in comp and w in comp)
        h_graph = ColoredGraph(len(s), comp, edges)
        assert f_vector(link(p, v)) == f_vector(from_graph(h_graph))

    def test_unknown_cell(self, torus_graph):
        with pytest.raises(ValueError):
            link(from_graph(torus_graph), 10 ** 6)


def two_disjoint_bigons() -> SimplicialPoset:
    # two 2-gons sharing only the minimum: pure but not strongly connected
    return SimplicialPoset(
        2,
        (0, 1, 1, 1, 1, 2, 2, 2, 2),
        ((), (0,), (0,), (0,), (0,),
         (1, 2), (1, 2), (3, 4), (3, 4)),
        ("0", "a", "b", "c", "d", "e1", "e2", "e3", "e4"))


class TestPredicates:
    def test_torus_poset(self, torus_graph):
        p = from_graph(torus_graph)
        assert is_pure(p) and is_pseudomanifold(p) and is_normal(p)

    @given(admissible_graphs(max_pairs=3))
    def test_graph_posets_are_normal(self, g):
        assert is_normal(from_graph(g))

    def test_disjoint_facets_are_not_strongly_connected(self):
        p = two_disjoint_bigons()
        assert is_pure(p)
        assert not is_pseudomanifold(p)

    def test_simplex_boundary_is_pseudomanifold(self):
        assert is_normal(boundary_of_simplex(3))


class TestProperColoring:
    def test_torus_recovers_the_induced_coloring(self, torus_graph):
        p = from_graph(torus_graph)
        colors, conflict = proper_coloring(p)
        assert conflict is None
        assert colors == induced_coloring(p)

    def test_two_facet_sphere_colors_trivially(self):
        p = from_graph(parallel_edges_graph(4))
        colors, conflict = proper_coloring(p)
        assert conflict is None
        assert sorted(colors.values()) == [1, 2, 3, 4]

    def test_simplex_boundary_is_not_colorable(self):
        # d+1 mutually adjacent vertices cannot take d colors
        colors, conflict = proper_coloring(boundary_of_simplex(3))
        assert colors is None and conflict is not None

    @given(admissible_graphs(max_pairs=3))
    def test_graph_posets_recover_their_coloring(self, g):
        p = from_graph(g)
        colors, conflict = proper_coloring(p)
        assert conflict is None
        assert colors == induced_coloring(p)


class TestToGraph:
    def test_round_trip_torus(self, torus_graph):
        p = from_graph(torus_graph)
        g2 = to_graph(p, induced_coloring(p))
        assert set(g2.vertices) == set(torus_graph.vertices)
        assert sorted(tuple(sorted(e[:2])) + (e[2],) for e in g2.edges) == \
               sorted(tuple(sorted(e[:2])) + (e[2],) for e in torus_graph.edges)

    def test_two_vertex_round_trip(self):
        g = parallel_edges_graph(3)
        p = from_graph(g)
        g2 = to_graph(p, induced_coloring(p))
        assert set(g2.vertices) == {"P", "Q"}
        assert sorted(e[2] for e in g2.edges) == [1, 2, 3]

    @given(admissible_graphs(max_pairs=3))
    def test_round_trip_random(self, g):
        p = from_graph(g)
        g2 = to_graph(p, induced_coloring(p))
        assert sorted(tuple(sorted(e[:2])) + (e[2],) for e in g2.edges) == \
               sorted(tuple(sorted(e[:2])) + (e[2],) for e in g.edges)

    def test_rejects_non_pseudomanifold(self):
        with pytest.raises(ValueError, match="pseudomanifold"):
            to_graph(two_disjoint_bigons(), {})

    def test_rejects_improper_coloring(self, torus_graph):
        p = from_graph(torus_graph)
        bad = {v: 1 for v in p.cells_by_rank[1]}
        with pytest.raises(ValueError, match="rainbow"):
            to_graph(p, bad)


class TestJson:
    def test_round_trip(self, torus_graph):
        p = from_graph(torus_graph)
        q = poset_from_json(poset_to_json(p))
        assert (q.d, q.ranks, q.covers, q.labels) == \
               (p.d, p.ranks, p.covers, p.labels)

    def test_minimum_is_cell_zero(self, torus_graph):
        import json
        data = json.loads(poset_to_json(from_graph(torus_graph)))
        cell0 = next(c for c in data["cells"] if c["id"] == 0)
        assert cell0["rank"] == 0 and cell0["covers"] == []
