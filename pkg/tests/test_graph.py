import random
from collections import defaultdict
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from graphclass.graph import (
    Graph,
    GraphError,
    VertexPermutation,
    canonical_form,
    components,
    empty_graph,
    enumerate_connected_graphs,
    from_edges,
    induced_subgraph,
    is_connected,
    local_complement,
)
from oracles import (
    all_labeled_graphs,
    automorphism_count,
    brute_canonical,
    brute_connected_classes,
    graphs,
    graphs_with_permutation,
    labeled_connected_count,
    to_nx,
)


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


class TestFromEdges:
    def test_path(self, p3):
        assert p3.adj == (0b010, 0b101, 0b010)
        assert p3.edges() == [(0, 1), (1, 2)]

    def test_edgeless(self):
        assert from_edges(2, []) == Graph(2, (0, 0))

    def test_duplicates_collapse(self):
        g = from_edges(3, [(0, 1), (1, 0)])
        assert g.edges() == [(0, 1)]

    @pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
    def test_rejects(self, edges):
        with pytest.raises(GraphError):
            from_edges(3, edges)

    @pytest.mark.parametrize(
        "n, adj",
        [(2, (0b10, 0b00)), (2, (0b01, 0b00)), (2, (0b110, 0b001)), (13, (0,) * 13), (0, ())],
    )
    def test_graph_invariants_enforced(self, n, adj):
        with pytest.raises(GraphError):
            Graph(n, adj)


class TestLocalComplement:
    def test_path_to_triangle(self, p3, triangle):
        assert local_complement(p3, 1) == triangle

    def test_triangle_to_path(self, triangle):
        assert edge_set(local_complement(triangle, 0)) == {frozenset((0, 1)), frozenset((0, 2))}

    def test_out_of_range(self, p3):
        with pytest.raises(GraphError):
            local_complement(p3, 3)

    @given(graphs())
    def test_involution(self, g):
        for v in range(g.n):
            assert local_complement(local_complement(g, v), v) == g

    @given(graphs(min_n=2))
    def test_preserves_connectivity(self, g):
        for v in range(g.n):
            assert is_connected(local_complement(g, v)) == is_connected(g)

    @given(graphs())
    def test_matches_definition(self, g):
        G = to_nx(g)
        for v in range(g.n):
            nb = list(G[v])
            expected = edge_set(g) ^ {frozenset((a, b)) for i, a in enumerate(nb) for b in nb[i + 1 :]}
            assert edge_set(local_complement(g, v)) == expected


class TestConnectivity:
    def test_examples(self, p3):
        assert is_connected(p3)
        assert not is_connected(empty_graph(2))
        assert not is_connected(from_edges(4, [(0, 1), (1, 2), (0, 2)]))
        assert is_connected(empty_graph(1))

    @given(graphs())
    def test_components_match_networkx(self, g):
        ours = sorted(sorted(v for v in range(g.n) if c >> v & 1) for c in components(g))
        assert ours == sorted(sorted(c) for c in nx.connected_components(to_nx(g)))

    def test_induced_subgraph(self):
        g = from_edges(5, [(1, 3), (3, 4), (0, 2)])
        sub = induced_subgraph(g, 0b11010)
        assert sub.n == 3 and sub.edges() == [(0, 1), (1, 2)]


class TestCanonicalForm:
    def test_relabelings_of_path(self):
        a = from_edges(3, [(0, 1), (1, 2)])
        b = from_edges(3, [(1, 0), (0, 2)])
        assert canonical_form(a)[0] == canonical_form(b)[0]

    def test_triangle(self, triangle):
        assert canonical_form(triangle)[0] == triangle

    def test_all_labelings_of_p3(self, p3):
        outputs = {canonical_form(VertexPermutation(perm).apply(p3))[0] for perm in permutations(range(3))}
        assert len(outputs) == 1

    @given(graphs())
    def test_permutation_maps_to_canonical(self, g):
        c, sigma = canonical_form(g)
        assert sigma.apply(g) == c

    @given(graphs_with_permutation())
    def test_constant_on_isomorphism_class(self, gp):
        g, image = gp
        h = VertexPermutation(image).apply(g)
        assert canonical_form(h)[0] == canonical_form(g)[0]

    def test_random_graphs_and_permutations(self):
        rng = random.Random(20090101)
        for _ in range(100):
            n = rng.randint(1, 9)
            g = from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
            c = canonical_form(g)[0]
            for _ in range(20):
                image = list(range(n))
                rng.shuffle(image)
                assert canonical_form(VertexPermutation(tuple(image)).apply(g))[0] == c

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_separates_exactly_like_brute_force(self, n):
        # canonical forms agree iff brute-force canonical forms agree
        ours, brute = {}, {}
        for g in all_labeled_graphs(n):
            ours.setdefault(canonical_form(g)[0], set()).add(g)
            brute.setdefault(brute_canonical(n, edge_set(g)), set()).add(g)
        assert set(map(frozenset, ours.values())) == set(map(frozenset, brute.values()))

    def test_highly_symmetric_graphs(self):
        for n in (8, 10, 12):
            k = from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
            assert canonical_form(k)[0] == k
            assert canonical_form(empty_graph(n))[0] == empty_graph(n)
        cube = from_edges(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])
        shuffled = VertexPermutation((3, 6, 0, 7, 2, 5, 1, 4)).apply(cube)
        assert canonical_form(shuffled)[0] == canonical_form(cube)[0]


class TestEnumerateConnected:
    def test_small(self):
        assert enumerate_connected_graphs(2) == [from_edges(2, [(0, 1)])]
        assert len(enumerate_connected_graphs(3)) == 2

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_equals_brute_force_sweep(self, n):
        ours = {brute_canonical(n, edge_set(g)) for g in enumerate_connected_graphs(n)}
        assert len(ours) == len(enumerate_connected_graphs(n))
        assert ours == brute_connected_classes(n)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_matches_graph_atlas(self, n):
        atlas = [G for G in nx.graph_atlas_g() if G.number_of_nodes() == n and nx.is_connected(G)]
        ours = enumerate_connected_graphs(n)
        assert len(ours) == len(atlas)
        # pairwise non-isomorphic: bucket by WL hash, then check within buckets
        buckets = defaultdict(list)
        for g in ours:
            G = to_nx(g)
            buckets[nx.weisfeiler_lehman_graph_hash(G)].append(G)
        for bucket in buckets.values():
            for i, a in enumerate(bucket):
                assert not any(nx.is_isomorphic(a, b) for b in bucket[i + 1 :])

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_orbit_counting_identity(self, n):
        # sum over classes of n!/|Aut| counts every labeled connected graph exactly once
        from math import factorial

        graphs_n = enumerate_connected_graphs(n)
        assert sum(factorial(n) // automorphism_count(g) for g in graphs_n) == labeled_connected_count(n)

    def test_known_counts(self):
        # frozen from the counting identity above
        assert [len(enumerate_connected_graphs(n)) for n in range(1, 9)] == [1, 1, 2, 6, 21, 112, 853, 11117]

    def test_deterministic_and_canonical(self):
        a = enumerate_connected_graphs(6)
        assert a == enumerate_connected_graphs(6)
        assert all(canonical_form(g)[0] == g and is_connected(g) for g in a)


class TestVertexPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(GraphError):
            VertexPermutation((0, 0, 1))

    @settings(max_examples=50)
    @given(graphs_with_permutation())
    def test_inverse(self, gp):
        g, image = gp
        sigma = VertexPermutation(image)
        assert sigma.inverse().apply(sigma.apply(g)) == g
