import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphclass.graph import empty_graph, from_edges
from graphclass.stabilizer import (
    PauliOperator,
    decomposition_label,
    element,
    enumerate_stabilizer,
    format_mask,
    generators,
    multiply,
    stabilizer_rows,
    support,
)
from oracles import all_labeled_graphs, brute_element, dense, graph_generators, graphs

P = PauliOperator.from_string

# stabilizer of the three-qubit linear cluster:
# operator, generator product, support
TABLE_I = {
    "XZ1": ("g1", "{1,2}"),
    "ZXZ": ("g2", "{1,2,3}"),
    "1ZX": ("g3", "{2,3}"),
    "111": ("1", "{}"),
    "YYZ": ("g1 g2", "{1,2,3}"),
    "X1X": ("g1 g3", "{1,3}"),
    "ZYY": ("g2 g3", "{1,2,3}"),
    "-YXY": ("g1 g2 g3", "{1,2,3}"),
}


def as_pair(p: PauliOperator) -> tuple[int, str]:
    return p.phase_exp, p.letters()


class TestPauliOperator:
    @pytest.mark.parametrize("text", ["XZ1", "-YXY", "iZ", "-iXY", "111"])
    def test_string_round_trip(self, text):
        assert str(P(text)) == text

    def test_masks(self):
        p = P("XYZ1")
        assert (p.x_mask, p.z_mask) == (0b0011, 0b0110)

    @pytest.mark.parametrize(
        "op, mask, weight", [("ZXZ", 0b111, 3), ("111", 0, 0), ("X1X", 0b101, 2)]
    )
    def test_support(self, op, mask, weight):
        assert support(P(op)) == mask
        assert P(op).weight == weight


class TestGenerators:
    def test_path(self, p3):
        assert [str(g) for g in generators(p3)] == ["XZ1", "ZXZ", "1ZX"]

    def test_edge(self):
        assert [str(g) for g in generators(from_edges(2, [(0, 1)]))] == ["XZ", "ZX"]

    def test_edgeless(self):
        assert [str(g) for g in generators(empty_graph(2))] == ["X1", "1X"]

    @given(graphs())
    def test_structure(self, g):
        gens = generators(g)
        for i, p in enumerate(gens):
            assert p.x_mask == 1 << i and p.z_mask == g.adj[i] and p.phase_exp == 0


class TestMultiply:
    def test_table_examples(self):
        s5 = multiply(P("XZ1"), P("ZXZ"))
        assert str(s5) == "YYZ"
        assert str(multiply(s5, P("1ZX"))) == "-YXY"

    @pytest.mark.parametrize("a, b, c", [("X", "Z", "-iY"), ("Z", "X", "iY"), ("X", "Y", "iZ"), ("Y", "X", "-iZ")])
    def test_single_qubit(self, a, b, c):
        assert str(P(a) * P(b)) == c

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            multiply(P("XX"), P("X"))

    @given(st.text("1XYZ", min_size=1, max_size=4), st.text("1XYZ", min_size=4, max_size=4), st.integers(0, 3), st.integers(0, 3))
    def test_matches_dense_matrices(self, a, b, ea, eb):
        b = b[: len(a)]
        p, q = PauliOperator.from_string(a), PauliOperator.from_string(b)
        p = PauliOperator(p.n, p.x_mask, p.z_mask, ea)
        q = PauliOperator(q.n, q.x_mask, q.z_mask, eb)
        r = multiply(p, q)
        assert np.allclose(dense(as_pair(p)) @ dense(as_pair(q)), dense(as_pair(r)))

    @given(st.text("1XYZ", min_size=1, max_size=6), st.sampled_from([0, 2]))
    def test_hermitian_square_is_identity(self, letters, e):
        p = PauliOperator.from_string(letters)
        p = PauliOperator(p.n, p.x_mask, p.z_mask, e)
        assert multiply(p, p) == PauliOperator.identity(p.n)


class TestElement:
    @pytest.mark.parametrize("a, expected", [(0b011, "YYZ"), (0b000, "111"), (0b101, "X1X")])
    def test_path(self, p3, a, expected):
        assert str(element(generators(p3), a)) == expected

    def test_out_of_range(self, p3):
        with pytest.raises(ValueError):
            element(generators(p3), 8)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_homomorphism_exhaustive(self, n):
        for g in all_labeled_graphs(n):
            gens = generators(g)
            elems = [element(gens, a) for a in range(1 << n)]
            for a in range(1 << n):
                assert as_pair(elems[a]) == brute_element(g, a)
                for b in range(1 << n):
                    assert multiply(elems[a], elems[b]) == elems[a ^ b]

    @settings(max_examples=30)
    @given(graphs(max_n=8), st.data())
    def test_homomorphism_random(self, g, data):
        gens = generators(g)
        for _ in range(20):
            a = data.draw(st.integers(0, (1 << g.n) - 1))
            b = data.draw(st.integers(0, (1 << g.n) - 1))
            assert multiply(element(gens, a), element(gens, b)) == element(gens, a ^ b)

    @given(graphs(), st.data())
    def test_z_mask_is_adjacency_product(self, g, data):
        a = data.draw(st.integers(0, (1 << g.n) - 1))
        z = 0
        for i in range(g.n):
            if a >> i & 1:
                z ^= g.adj[i]
        e = element(generators(g), a)
        assert (e.x_mask, e.z_mask) == (a, z)


class TestEnumerateStabilizer:
    def test_table_i(self, p3):
        rows = {op: (dec, sup) for op, dec, sup, _ in stabilizer_rows(p3)}
        assert rows == TABLE_I

    def test_edge(self):
        # frozen from the matrix oracle: products of XZ and ZX
        g = from_edges(2, [(0, 1)])
        expected = []
        for a in range(4):
            ph, letters = brute_element(g, a)
            expected.append(("-" if ph == 2 else "") + letters)
        assert expected == ["11", "XZ", "ZX", "YY"]
        assert [str(s) for s in enumerate_stabilizer(g)] == expected

    @pytest.mark.parametrize("n", range(1, 7))
    def test_no_minus_identity_and_real_phases(self, n):
        for g in all_labeled_graphs(n):
            for s in enumerate_stabilizer(g):
                assert s.phase_exp in (0, 2)
                if s.support == 0:
                    assert s.phase_exp == 0

    @given(graphs(max_n=6))
    def test_abelian_and_stabilizes_the_state(self, g):
        stab = enumerate_stabilizer(g)
        for s in stab:
            for t in stab[:16]:
                assert s.commutes_with(t)
        if g.n <= 4:
            # the graph state is the common +1 eigenvector of the generators
            mats = [dense(gen) for gen in graph_generators(g)]
            proj = np.eye(1 << g.n)
            for m in mats:
                proj = proj @ (np.eye(1 << g.n) + m) / 2
            psi = proj[:, np.argmax(np.abs(proj).sum(axis=0))]
            for s in stab:
                assert np.allclose(dense(as_pair(s)) @ psi, psi)

    def test_index_order(self, p3):
        stab = enumerate_stabilizer(p3)
        gens = generators(p3)
        assert stab == [element(gens, a) for a in range(8)]


def test_labels():
    assert format_mask(0) == "{}"
    assert format_mask(0b101) == "{1,3}"
    assert decomposition_label(0b111) == "g1 g2 g3"
    assert decomposition_label(0) == "1"
