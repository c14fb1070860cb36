"""Labeled simple graphs stored as adjacency bit-rows.

Row ``i`` of ``Graph.adj`` is an integer whose bit ``j`` is set iff vertices
``i`` and ``j`` are adjacent. Vertices are 0-indexed here; text I/O in
:mod:`graphclass.graphio` is 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_VERTICES = 12


class GraphError(ValueError):
    """Raised for invalid vertices, edges or graph data."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __str__(self) -> str:
        edges = " ".join(f"{u + 1}-{v + 1}" for u, v in self.edges())
        return f"{self.n}: {edges}".rstrip()


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection ``i -> image[i]`` on ``{0, ..., n-1}``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise GraphError(f"not a permutation: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def inverse(self) -> VertexPermutation:
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return VertexPermutation(tuple(inv))

    def apply(self, g: Graph) -> Graph:
        """Relabel ``g`` so that edge ``{u, v}`` becomes ``{image[u], image[v]}``."""
        if g.n != self.n:
            raise GraphError(f"permutation on {self.n} points applied to {g.n}-vertex graph")
        return Graph(g.n, _relabel(g.adj, self.image))

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= 1 << self.image[i]
        return out


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _relabel(adj: Sequence[int], image: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(adj)
    for i, row in enumerate(adj):
        m = 0
        for j in _bits(row):
            m |= 1 << image[j]
        out[image[i]] = m
    return tuple(out)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from 0-indexed vertex pairs."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return Graph(g.n, _local_complement(g.adj, v))


def _local_complement(adj: Sequence[int], v: int) -> tuple[int, ...]:
    nb = adj[v]
    out = list(adj)
    for u in _bits(nb):
        out[u] ^= nb & ~(1 << u)
    return tuple(out)


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by lowest vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph on the vertices of ``mask``, relabeled 0.. in increasing order."""
    verts = list(_bits(mask))
    pos = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in _bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(verts), tuple(adj))


# --- canonical labeling -----------------------------------------------------
#
# Individualization-refinement search. Every leaf of the search tree is a
# vertex ordering; the canonical form is the ordering with the smallest
# upper-triangle bit string (graph6 column order, first bit most significant).
# Subtrees are pruned with automorphisms: twin transpositions are known up
# front, further ones are read off leaves with equal certificates.


def certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle bits of the graph listed in ``order`` (position -> vertex)."""
    cert = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (row >> order[i] & 1)
    return cert


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until equitable."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for i, j in enumerate(gamma):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(i) for i in range(n)]


def _canonical_order(n: int, adj: Sequence[int]) -> list[int]:
    autos: list[tuple[int, ...]] = []
    for u in range(n):
        for w in range(u + 1, n):
            if adj[u] & ~(1 << w) == adj[w] & ~(1 << u):
                perm = list(range(n))
                perm[u], perm[w] = w, u
                autos.append(tuple(perm))

    best_cert = -1
    best_order: list[int] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_cert, best_order
        target = next((k for k, c in enumerate(cells) if len(c) > 1), -1)
        if target < 0:
            order = [c[0] for c in cells]
            cert = certificate(adj, order)
            if best_cert < 0 or cert < best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                gamma = [0] * n
                for a, b in zip(order, best_order):
                    gamma[a] = b
                autos.append(tuple(gamma))
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                stab = [g for g in autos if all(g[f] == f for f in fixed)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if any(roots[v] == roots[t] for t in tried):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(adj, child), fixed + [v])
            tried.append(v)

    search(_refine(adj, [list(range(n))]), [])
    return best_order


def canonical_form(g: Graph) -> tuple[Graph, VertexPermutation]:
    """Return ``(c, sigma)`` with ``sigma.apply(g) == c``.

    ``c`` depends only on the isomorphism class of ``g``.
    """
    order = _canonical_order(g.n, g.adj)
    image = [0] * g.n
    for pos, v in enumerate(order):
        image[v] = pos
    sigma = VertexPermutation(tuple(image))
    return Graph(g.n, _relabel(g.adj, image)), sigma


def canonical_adj(adj: Sequence[int]) -> tuple[int, ...]:
    """Fast path for :func:`canonical_form` on raw adjacency rows."""
    n = len(adj)
    order = _canonical_order(n, adj)
    image = [0] * n
    for pos, v in enumerate(order):
        image[v] = pos
    return _relabel(adj, image)


def canonical_key(g: Graph) -> int:
    """Certificate of the canonical form; orders canonical graphs lexicographically."""
    return certificate(g.adj, range(g.n))


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Built level by level: every connected graph has a vertex whose removal
    leaves it connected, so extending each connected ``k``-vertex graph by a
    new vertex with every non-empty neighbourhood reaches all connected
    ``k+1``-vertex graphs. Output is sorted by canonical certificate.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    return [Graph(n, adj) for adj in _connected_level(n)]


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    nxt: set[tuple[int, ...]] = set()
    k = n - 1
    for adj in _connected_level(k):
        for mask in range(1, 1 << k):
            rows = list(adj)
            for u in _bits(mask):
                rows[u] |= 1 << k
            rows.append(mask)
            nxt.add(canonical_adj(rows))
    return tuple(sorted(nxt, key=lambda adj: certificate(adj, range(n))))
