"""Pauli operators in binary symplectic form and graph-state stabilizers.

A :class:`PauliOperator` is ``i**phase_exp`` times a tensor product whose
qubit ``j`` factor is read off bit ``j`` of ``x_mask`` and ``z_mask``:
``(0,0) -> 1``, ``(1,0) -> X``, ``(0,1) -> Z``, ``(1,1) -> Y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

MAX_STABILIZER_QUBITS = 12

_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}
_LETTERS = "1XZY"


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, 0, 0, 0)

    @classmethod
    def from_string(cls, text: str) -> PauliOperator:
        """Parse e.g. ``"-YXY"`` or ``"XZ1"`` (``I`` is accepted for identity)."""
        phase = 0
        for prefix, exp in (("-i", 3), ("+i", 1), ("i", 1), ("-", 2), ("+", 0)):
            if text.startswith(prefix):
                text, phase = text[len(prefix) :], exp
                break
        x = z = 0
        for j, ch in enumerate(text):
            if ch in "1I":
                continue
            if ch not in "XYZ":
                raise ValueError(f"bad Pauli letter {ch!r}")
            if ch in "XY":
                x |= 1 << j
            if ch in "ZY":
                z |= 1 << j
        return cls(len(text), x, z, phase)

    @property
    def support(self) -> int:
        return self.x_mask | self.z_mask

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    def letters(self) -> str:
        return "".join(
            _LETTERS[(self.x_mask >> j & 1) | (self.z_mask >> j & 1) << 1] for j in range(self.n)
        )

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase_exp % 4] + self.letters()

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def commutes_with(self, other: PauliOperator) -> bool:
        """True iff the symplectic inner product vanishes."""
        return ((self.x_mask & other.z_mask).bit_count() + (self.z_mask & other.x_mask).bit_count()) % 2 == 0


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    generators: tuple[PauliOperator, ...]

    def __getitem__(self, i: int) -> PauliOperator:
        return self.generators[i]

    def __len__(self) -> int:
        return len(self.generators)


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Matrix product ``p @ q`` with exact phase.

    Per qubit ``XY = iZ``, ``YZ = iX``, ``ZX = iY`` and the reversed
    products carry ``-i``.
    """
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} vs {q.n}")
    px, py, pz = p.x_mask & ~p.z_mask, p.x_mask & p.z_mask, p.z_mask & ~p.x_mask
    qx, qy, qz = q.x_mask & ~q.z_mask, q.x_mask & q.z_mask, q.z_mask & ~q.x_mask
    plus = (px & qy).bit_count() + (py & qz).bit_count() + (pz & qx).bit_count()
    minus = (px & qz).bit_count() + (py & qx).bit_count() + (pz & qy).bit_count()
    phase = (p.phase_exp + q.phase_exp + plus - minus) % 4
    return PauliOperator(p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask, phase)


def generators(g: Graph) -> GeneratorSet:
    """``g_i`` has X on qubit ``i`` and Z on every neighbour of ``i``."""
    return GeneratorSet(g.n, tuple(PauliOperator(g.n, 1 << i, g.adj[i], 0) for i in range(g.n)))


def element(gens: GeneratorSet, a: int) -> PauliOperator:
    """Ordered product ``g_1^{a_1} ... g_n^{a_n}``; bit ``i`` of ``a`` selects ``g_{i+1}``."""
    if not 0 <= a < 1 << gens.n:
        raise ValueError(f"index {a} out of range for n={gens.n}")
    out = PauliOperator.identity(gens.n)
    for i in range(gens.n):
        if a >> i & 1:
            out = multiply(out, gens[i])
    return out


def support(p: PauliOperator) -> int:
    return p.x_mask | p.z_mask


def enumerate_stabilizer(g: Graph) -> list[PauliOperator]:
    """All ``2**n`` stabilizer elements, entry ``a`` equal to ``element(gens, a)``."""
    if g.n > MAX_STABILIZER_QUBITS:
        raise ValueError(f"refusing to enumerate 2**{g.n} stabilizer elements")
    gens = generators(g)
    out = [PauliOperator.identity(g.n)]
    for a in range(1, 1 << g.n):
        top = a.bit_length() - 1
        # the highest generator is the last factor of the ordered product
        out.append(multiply(out[a ^ (1 << top)], gens[top]))
    return out


def format_mask(mask: int) -> str:
    """``0b101 -> "{1,3}"``; the empty set is ``"{}"``."""
    labels = [str(j + 1) for j in range(mask.bit_length()) if mask >> j & 1]
    return "{" + ",".join(labels) + "}"


def decomposition_label(a: int) -> str:
    """Generator product for index ``a``, e.g. ``"g1 g2 g3"``; ``"1"`` for the empty product."""
    labels = [f"g{j + 1}" for j in range(a.bit_length()) if a >> j & 1]
    return " ".join(labels) if labels else "1"


def stabilizer_rows(g: Graph) -> list[tuple[str, str, str, int]]:
    """``(operator, decomposition, support, weight)`` for every stabilizer element."""
    return [
        (str(s), decomposition_label(a), format_mask(s.support), s.weight)
        for a, s in enumerate(enumerate_stabilizer(g))
    ]
