"""Local-Clifford invariants of graph states built from stabilizer supports.

The basic quantity is the support tally: for every subset ``w`` of qubits,
the number ``A_w`` of stabilizer elements acting non-trivially exactly on
``w``. Everything else here is a compression of that tally.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Context
from itertools import product
from math import comb
from typing import Mapping

from .graph import Graph, VertexPermutation
from .stabilizer import MAX_STABILIZER_QUBITS, format_mask


@dataclass(frozen=True)
class SupportTally:
    n: int
    counts: Mapping[int, int] = field(hash=False)

    def __getitem__(self, support: int) -> int:
        return self.counts.get(support, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def permuted(self, sigma: VertexPermutation) -> SupportTally:
        """Tally of the relabeled state: ``A'_{sigma(w)} = A_w``."""
        return SupportTally(self.n, {sigma.apply_mask(w): c for w, c in self.counts.items()})

    def format(self) -> list[str]:
        return [f"{format_mask(w)}\t{c}" for w, c in sorted(self.counts.items(), key=_subset_order)]


def _subset_order(item: tuple[int, int]) -> tuple[int, list[int]]:
    w = item[0]
    return w.bit_count(), [j for j in range(w.bit_length()) if w >> j & 1]


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    a: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(map(str, self.a))


@dataclass(frozen=True, order=True)
class MultiplicitySignature:
    """Sorted ``(value, multiplicity)`` pairs over all ``2**n`` supports."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        values = [v for v, _ in self.pairs]
        if values != sorted(set(values)):
            raise ValueError(f"signature values must be strictly increasing: {values}")
        if any(m < 1 for _, m in self.pairs):
            raise ValueError("signature multiplicities must be positive")

    def multiplicity(self, value: int) -> int:
        return dict(self.pairs).get(value, 0)

    @property
    def n(self) -> int:
        return (sum(m for _, m in self.pairs)).bit_length() - 1

    def __str__(self) -> str:
        return ",".join(f"{v}_{m}" for v, m in self.pairs)

    @classmethod
    def parse(cls, text: str) -> MultiplicitySignature:
        """Inverse of ``str``: ``"0_3,1_4,4_1"``."""
        pairs = []
        for tok in text.strip().split(","):
            m = re.fullmatch(r"\s*(\d+)_(\d+)\s*", tok)
            if not m:
                raise ValueError(f"bad signature term {tok!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(pairs))


@dataclass(frozen=True, order=True)
class CompactInvariant:
    m0: int
    m1: int
    m3: int
    m4: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m0, self.m1, self.m3, self.m4)

    def __str__(self) -> str:
        return ",".join(map(str, self.as_tuple()))


@dataclass(frozen=True)
class TupleSupportSpec:
    """Support pattern for ``r``-tuples: ``singles[k]`` for ``s_k`` and
    ``pairs`` for the products ``s_k s_l`` in order (1,2), (1,3), (2,3)."""

    singles: tuple[int, ...]
    pairs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        r = len(self.singles)
        if not 1 <= r <= 3:
            raise ValueError(f"tuple length must be 1..3, got {r}")
        if len(self.pairs) != r * (r - 1) // 2:
            raise ValueError(f"r={r} needs {r * (r - 1) // 2} pair supports, got {len(self.pairs)}")

    @property
    def r(self) -> int:
        return len(self.singles)


def _element_supports(g: Graph) -> list[int]:
    """Support of ``element(a)`` for every index ``a``: ``a | (Gamma a)``."""
    n = g.n
    if n > MAX_STABILIZER_QUBITS:
        raise ValueError(f"refusing to enumerate 2**{n} stabilizer elements")
    z = [0] * (1 << n)
    for a in range(1, 1 << n):
        low = a & -a
        z[a] = z[a ^ low] ^ g.adj[low.bit_length() - 1]
    return [a | z[a] for a in range(1 << n)]


def support_tally(g: Graph) -> SupportTally:
    return SupportTally(g.n, dict(Counter(_element_supports(g))))


def weight_distribution(t: SupportTally) -> WeightDistribution:
    a = [0] * (t.n + 1)
    for w, c in t.counts.items():
        a[w.bit_count()] += c
    return WeightDistribution(t.n, tuple(a))


def multiplicity_signature(t: SupportTally) -> MultiplicitySignature:
    present = Counter(c for c in t.counts.values() if c)
    absent = (1 << t.n) - sum(present.values())
    if absent:
        present[0] += absent
    return MultiplicitySignature(tuple(sorted(present.items())))


def compact_invariant(s: MultiplicitySignature) -> CompactInvariant:
    return CompactInvariant(*(s.multiplicity(v) for v in (0, 1, 3, 4)))


def t_invariant(g: Graph, spec: TupleSupportSpec) -> int:
    """Number of ordered ``r``-tuples of stabilizer elements matching ``spec``.

    Supports of products do not depend on phases, so elements are handled by
    index: ``s_a s_b`` has the support of ``element(a ^ b)``.
    """
    if spec.r == 3 and g.n > 8:
        raise ValueError("r=3 is limited to n <= 8")
    supp = _element_supports(g)
    candidates = [[a for a, w in enumerate(supp) if w == target] for target in spec.singles]
    pair_index = [(k, l) for k in range(spec.r) for l in range(k + 1, spec.r)]
    count = 0
    for combo in product(*candidates):
        if all(supp[combo[k] ^ combo[l]] == w for (k, l), w in zip(pair_index, spec.pairs)):
            count += 1
    return count


# --- invariant counting ---------------------------------------------------------


def multiset_coefficient(m: int, k: int) -> int:
    """Combinations with repetition of ``m`` items taken ``k`` at a time."""
    return comb(m + k - 1, k)


def count_r_invariants(n: int, r: int) -> int:
    """Number of support patterns for tuple length ``r`` (1 or 2)."""
    if not 0 <= n <= 64:
        raise ValueError(f"n must be in 0..64, got {n}")
    m = 1 << n
    if r == 1:
        return m
    if r == 2:
        return m * (m + comb(m, 2))
    raise ValueError(f"r must be 1 or 2, got {r}")


def count_total_invariants(n: int) -> int:
    """``M + sum_{r=2..n} C'(M, r) C'(M, r(r-1)/2)`` with ``M = 2**n``."""
    if not 1 <= n <= 16:
        raise ValueError(f"n must be in 1..16, got {n}")
    m = 1 << n
    return m + sum(multiset_coefficient(m, r) * multiset_coefficient(m, comb(r, 2)) for r in range(2, n + 1))


def scientific(value: int, digits: int = 3) -> tuple[str, int]:
    """Round ``value`` to ``digits`` significant digits: ``(mantissa, exponent)``.

    >>> scientific(2179897651076833534400058377207101568)
    ('2.18', 36)
    """
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    d = ctx.create_decimal(value)
    exponent = d.adjusted()
    mantissa = d.scaleb(-exponent, ctx)
    return f"{mantissa:.{digits - 1}f}", exponent
