"""Width and the twist polynomial of a delta-matroid.

The twist polynomial counts the 2^n twists of a delta-matroid by width.
Two independent evaluation routes are kept side by side: a naive one that
scores every twist straight from the definition, and a fast one that reads
all 2^n widths off two multi-source BFS sweeps of the subset hypercube.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SetSystem, check_enum_size


@dataclass(frozen=True)
class WidthPolynomial:
    """Coefficient vector, index = width exponent, ascending."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("coefficient vector must be nonempty")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_counts(cls, counts: list[int]) -> "WidthPolynomial":
        top = len(counts)
        while top > 1 and counts[top - 1] == 0:
            top -= 1
        return cls(tuple(counts[:top]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    @property
    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    @property
    def eval_at_1(self) -> int:
        return sum(self.coeffs)

    def __mul__(self, other: "WidthPolynomial") -> "WidthPolynomial":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return WidthPolynomial.from_counts(out)

    def human(self) -> str:
        """Descending-degree rendering, e.g. "2z^2 + 2"."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                terms.append(z if c == 1 else f"{c}{z}")
        return " + ".join(terms) if terms else "0"

    def machine(self) -> str:
        return "coeffs: " + " ".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.human()


def width(d: SetSystem) -> int:
    """max feasible size - min feasible size; zero exactly for matroids."""
    sizes = [f.bit_count() for f in d.feasible]
    return max(sizes) - min(sizes)


def twist_width(d: SetSystem, a: int) -> int:
    """Width of D*A without materializing the twist."""
    if not 0 <= a <= d.full_mask:
        raise ValueError(f"twist mask {a} out of range")
    sizes = [(a ^ f).bit_count() for f in d.feasible]
    return max(sizes) - min(sizes)


_POP8 = np.array([x.bit_count() for x in range(256)], dtype=np.uint8)


def _popcounts(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a)
    return _POP8[a & 0xFF] + _POP8[(a >> 8) & 0xFF]


def twist_polynomial_naive(d: SetSystem) -> WidthPolynomial:
    """Twist polynomial straight from the definition.

    For every subset A the width of D*A is max_F |A△F| - min_F |A△F|;
    the coefficient of z^w counts the A of twist width w.  Evaluated as a
    broadcast popcount table over (subset, feasible) pairs, in chunks to
    bound memory.
    """
    check_enum_size(d.n)
    size = 1 << d.n
    feas = np.asarray(d.feasible, dtype=np.uint32)
    counts = np.zeros(d.n + 1, dtype=np.int64)
    chunk = max(1, (1 << 22) // len(feas))
    for lo in range(0, size, chunk):
        block = np.arange(lo, min(lo + chunk, size), dtype=np.uint32)
        pc = _popcounts(block[:, None] ^ feas[None, :]).astype(np.int16)
        counts += np.bincount(pc.max(axis=1) - pc.min(axis=1), minlength=d.n + 1)
    return WidthPolynomial.from_counts(counts.tolist())


def _hamming_distances(n: int, sources: list[int]) -> bytearray:
    """Multi-source BFS distances on the n-cube, one byte per subset."""
    dist = bytearray(b"\xff") * (1 << n)
    frontier = []
    for s in sources:
        if dist[s]:
            dist[s] = 0
            frontier.append(s)
    bits = [1 << i for i in range(n)]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for x in frontier:
            for b in bits:
                y = x ^ b
                if dist[y] == 0xFF:
                    dist[y] = level
                    nxt.append(y)
        frontier = nxt
    return dist


def twist_polynomial_fast(d: SetSystem) -> WidthPolynomial:
    """Twist polynomial in O(2^n · n) via two hypercube BFS sweeps.

    min_F |A△F| is the BFS distance of A from the feasible sets; the max
    is n minus the distance from their complements, since complementing
    one side of a symmetric difference flips |A△F| to n - |A△F|.
    """
    check_enum_size(d.n)
    n = d.n
    full = d.full_mask
    dmin = _hamming_distances(n, list(d.feasible))
    dmax_c = _hamming_distances(n, [full ^ f for f in d.feasible])
    counts = [0] * (n + 1)
    for a in range(1 << n):
        counts[n - dmax_c[a] - dmin[a]] += 1
    return WidthPolynomial.from_counts(counts)
