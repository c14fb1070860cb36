"""LC-equivalence classes of connected graph states and classification.

Orbits are computed on isomorphism classes: two unlabeled graphs share an
orbit when a sequence of local complementations (plus relabeling) maps one
onto the other.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .graph import (
    Graph,
    _local_complement,
    canonical_adj,
    canonical_form,
    canonical_key,
    components,
    enumerate_connected_graphs,
    induced_subgraph,
    is_connected,
)
from .graphio import from_graph6, to_graph6
from .invariants import (
    CompactInvariant,
    MultiplicitySignature,
    compact_invariant,
    multiplicity_signature,
    support_tally,
)

log = logging.getLogger(__name__)

DB_HEADER = "graphclass-db v1"
MAX_DB_VERTICES = 10


class ClassDatabaseError(Exception):
    pass


class SignatureCollisionError(ClassDatabaseError):
    """Two distinct LC orbits produced the same multiplicity signature."""


class NumberingError(ClassDatabaseError):
    pass


class DatabaseFormatError(ClassDatabaseError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ClassificationError(Exception):
    pass


class DisconnectedGraphError(ClassificationError):
    def __init__(self, g: Graph):
        self.components = [[v + 1 for v in range(g.n) if c >> v & 1] for c in components(g)]
        parts = "; ".join("{" + ",".join(map(str, c)) + "}" for c in self.components)
        super().__init__(
            f"graph is disconnected with components {parts}; classify each component separately"
        )


@dataclass(frozen=True)
class ClassRecord:
    class_id: int
    n: int
    representative: Graph
    member_count: int
    signature: MultiplicitySignature
    members: tuple[Graph, ...] = field(default=(), compare=False, repr=False)

    @property
    def compact(self) -> CompactInvariant:
        return compact_invariant(self.signature)


@dataclass(frozen=True)
class ReferenceRow:
    class_id: int
    n: int
    signature: MultiplicitySignature


class ClassDatabase:
    """Immutable collection of class records with signature lookups."""

    def __init__(self, records: Iterable[ClassRecord]):
        self.records: tuple[ClassRecord, ...] = tuple(sorted(records, key=lambda r: (r.n, r.class_id)))
        self.index: dict[MultiplicitySignature, int] = {}
        self._by_id: dict[int, ClassRecord] = {}
        for rec in self.records:
            if rec.signature in self.index:
                raise SignatureCollisionError(
                    f"classes {self.index[rec.signature]} and {rec.class_id} share signature {rec.signature}"
                )
            if rec.class_id in self._by_id:
                raise ClassDatabaseError(f"duplicate class id {rec.class_id}")
            self.index[rec.signature] = rec.class_id
            self._by_id[rec.class_id] = rec
        seen: dict[CompactInvariant, list[int]] = {}
        for rec in self.records:
            seen.setdefault(rec.compact, []).append(rec.class_id)
        self.compact_index = {c: ids[0] for c, ids in seen.items() if len(ids) == 1}
        self.compact_collisions = {c: ids for c, ids in seen.items() if len(ids) > 1}

    @property
    def n_max(self) -> int:
        return max((r.n for r in self.records), default=0)

    def by_n(self, n: int) -> list[ClassRecord]:
        return [r for r in self.records if r.n == n]

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.records:
            out[r.n] = out.get(r.n, 0) + 1
        return out

    def __getitem__(self, class_id: int) -> ClassRecord:
        return self._by_id[class_id]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClassDatabase) and self.records == other.records


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


def lc_orbit(g: Graph) -> frozenset[Graph]:
    """Canonical forms of every graph reachable from ``g`` by local complementation."""
    if not is_connected(g):
        raise DisconnectedGraphError(g)
    start = canonical_form(g)[0].adj
    seen = {start}
    queue = deque([start])
    while queue:
        adj = queue.popleft()
        for v in range(g.n):
            if adj[v].bit_count() < 2:
                continue
            nxt = canonical_adj(_local_complement(adj, v))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(Graph(g.n, adj) for adj in seen)


def lc_orbits(n: int) -> list[list[Graph]]:
    """Partition the connected ``n``-vertex graphs into LC orbits.

    Each orbit is sorted by canonical certificate; orbits are ordered by
    their least member.
    """
    graphs = enumerate_connected_graphs(n)
    position = {g.adj: k for k, g in enumerate(graphs)}
    uf = _UnionFind(len(graphs))
    for k, g in enumerate(graphs):
        for v in range(n):
            if g.adj[v].bit_count() >= 2:
                uf.union(k, position[canonical_adj(_local_complement(g.adj, v))])
    groups: dict[int, list[Graph]] = {}
    for k, g in enumerate(graphs):
        groups.setdefault(uf.find(k), []).append(g)
    # graphs are sorted by certificate, so each group's first member is its least
    return sorted(groups.values(), key=lambda members: canonical_key(members[0]))


def build_class_database(n_max: int, reference: Sequence[ReferenceRow] | None | str = "default") -> ClassDatabase:
    """Enumerate LC classes of connected graph states for ``2 <= n <= n_max``.

    Classes are first numbered by ``(n, least canonical member)``; with a
    reference table (the shipped one by default) they are renumbered by
    signature matching, see :func:`recover_paper_numbering`.
    """
    if not 2 <= n_max <= MAX_DB_VERTICES:
        raise ValueError(f"n_max must be in 2..{MAX_DB_VERTICES}, got {n_max}")
    records = []
    next_id = 1
    for n in range(2, n_max + 1):
        orbits = lc_orbits(n)
        log.info("n=%d: %d classes", n, len(orbits))
        for members in orbits:
            rep = members[0]
            sig = multiplicity_signature(support_tally(rep))
            records.append(ClassRecord(next_id, n, rep, len(members), sig, tuple(members)))
            next_id += 1
    db = ClassDatabase(records)
    if isinstance(reference, str):
        reference = load_reference()
    if reference is not None:
        db = recover_paper_numbering(db, reference)
    return db


def recover_paper_numbering(db: ClassDatabase, reference: Sequence[ReferenceRow]) -> ClassDatabase:
    """Renumber classes by matching signatures against ``reference``.

    Only sizes covered by both sides take part; the match must be a bijection
    there. Classes of sizes absent from the reference are numbered after the
    largest reference id, in their existing order.
    """
    ref_ns = {row.n for row in reference}
    shared = ref_ns & {r.n for r in db.records}
    ref_rows = [row for row in reference if row.n in shared]
    ref_by_sig = {row.signature: row for row in ref_rows}
    if len(ref_by_sig) != len(ref_rows):
        raise NumberingError("reference table contains duplicate signatures")

    problems = []
    matched: dict[int, int] = {}
    for rec in db.records:
        if rec.n not in shared:
            continue
        row = ref_by_sig.get(rec.signature)
        if row is None:
            problems.append(f"computed n={rec.n} class {rec.signature} not in reference")
        elif row.n != rec.n:
            problems.append(f"signature {rec.signature}: computed n={rec.n}, reference n={row.n}")
        else:
            matched[rec.class_id] = row.class_id
    used = set(matched.values())
    for row in ref_rows:
        if row.class_id not in used:
            problems.append(f"reference class {row.class_id} (n={row.n}) {row.signature} not computed")
    if problems:
        raise NumberingError("numbering recovery failed:\n  " + "\n  ".join(problems))

    next_id = max((row.class_id for row in reference), default=0) + 1
    out = []
    for rec in db.records:
        if rec.class_id in matched:
            new_id = matched[rec.class_id]
        else:
            new_id, next_id = next_id, next_id + 1
        out.append(
            ClassRecord(new_id, rec.n, rec.representative, rec.member_count, rec.signature, rec.members)
        )
    return ClassDatabase(out)


def classify(g: Graph, db: ClassDatabase, compact: bool = False) -> ClassRecord:
    """Look up the class of ``g`` from its support invariants alone.

    With ``compact=True`` only the four multiplicities M(0), M(1), M(3),
    M(4) are used.
    """
    if g.n < 2 or g.n > db.n_max:
        raise ClassificationError(f"n={g.n} outside the database range 2..{db.n_max}")
    if not is_connected(g):
        raise DisconnectedGraphError(g)
    sig = multiplicity_signature(support_tally(g))
    if compact:
        key = compact_invariant(sig)
        if key in db.compact_collisions:
            raise ClassificationError(f"compact invariant {key} is shared by classes {db.compact_collisions[key]}")
        class_id = db.compact_index.get(key)
    else:
        class_id = db.index.get(sig)
    if class_id is None:
        raise ClassificationError(f"signature {sig} not found in the database (inconsistent database?)")
    return db[class_id]


def classify_components(g: Graph, db: ClassDatabase) -> list[tuple[list[int], ClassRecord | None]]:
    """Classify each connected component; isolated vertices map to ``None``.

    Vertex labels in the result are 1-indexed.
    """
    out = []
    for comp in components(g):
        verts = [v + 1 for v in range(g.n) if comp >> v & 1]
        if len(verts) == 1:
            out.append((verts, None))
        else:
            out.append((verts, classify(induced_subgraph(g, comp), db)))
    return out


# --- files --------------------------------------------------------------------------


def format_database(db: ClassDatabase) -> str:
    lines = [DB_HEADER]
    for r in db.records:
        lines.append(f"{r.n}\t{r.class_id}\t{to_graph6(r.representative)}\t{r.member_count}\t{r.signature}")
    return "\n".join(lines) + "\n"


def parse_database(text: str) -> ClassDatabase:
    lines = text.splitlines()
    if not lines or lines[0] != DB_HEADER:
        raise DatabaseFormatError(f"expected header {DB_HEADER!r}", 1)
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 5:
            raise DatabaseFormatError(f"expected 5 tab-separated fields, got {len(fields)}", lineno)
        try:
            n, class_id, member_count = int(fields[0]), int(fields[1]), int(fields[3])
            rep = from_graph6(fields[2], lineno)
            sig = MultiplicitySignature.parse(fields[4])
        except ValueError as exc:
            raise DatabaseFormatError(str(exc), lineno) from exc
        if rep.n != n:
            raise DatabaseFormatError(f"representative has {rep.n} vertices, record says {n}", lineno)
        records.append(ClassRecord(class_id, n, rep, member_count, sig))
    return ClassDatabase(records)


def write_database(db: ClassDatabase, path: str | Path) -> None:
    Path(path).write_text(format_database(db), encoding="utf-8")


def read_database(path: str | Path) -> ClassDatabase:
    return parse_database(Path(path).read_text(encoding="utf-8"))


def parse_reference(text: str) -> list[ReferenceRow]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise DatabaseFormatError("expected 'class_id <tab> n <tab> signature'", lineno)
        try:
            row = ReferenceRow(int(fields[0]), int(fields[1]), MultiplicitySignature.parse(fields[2]))
        except ValueError as exc:
            raise DatabaseFormatError(str(exc), lineno) from exc
        if row.signature.n != row.n:
            raise DatabaseFormatError(f"signature sums to 2**{row.signature.n}, not 2**{row.n}", lineno)
        rows.append(row)
    return rows


def load_reference(path: str | Path | None = None) -> list[ReferenceRow]:
    """Read a reference table; defaults to the shipped 146-class table."""
    if path is None:
        text = resources.files("graphclass").joinpath("data/reference_classes.tsv").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_reference(text)
