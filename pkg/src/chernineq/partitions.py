"""Integer partitions: the index set of Chern monomials and Schur polynomials.

Partitions are stored without trailing zeros. ``Partition(())`` is the empty
partition of weight 0 and indexes the constant monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

__all__ = [
    "Partition",
    "enumerate_gamma",
    "conjugate",
    "dominance_leq",
    "count_partitions",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> Partition:
        """Build from loose parts, sorting and dropping zeros."""
        return cls(tuple(sorted((p for p in parts if p != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the comma-separated wire form, e.g. ``"2,1"``."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            values = [int(t) for t in text.split(",") if t.strip()]
        except ValueError as exc:
            raise ValueError(f"bad partition text {text!r}") from exc
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded(self, size: int) -> tuple[int, ...]:
        if size < self.length:
            raise ValueError("cannot pad below the partition length")
        return self.parts + (0,) * (size - self.length)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


@lru_cache(maxsize=None)
def _gamma(k: int, r: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, r, [])
    return tuple(out)


def enumerate_gamma(k: int, r: int) -> list[Partition]:
    """Partitions of weight ``k`` with largest part at most ``r``.

    Output is in reverse-lexicographic order, e.g. ``(3), (2,1), (1,1,1)``.
    """
    if k < 1 or r < 1:
        raise ValueError("enumerate_gamma needs k >= 1 and r >= 1")
    return list(_gamma(k, r))


def conjugate(lam: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in lam.parts if p > i) for i in range(lam.largest)))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    if lam.weight != mu.weight:
        raise ValueError("dominance order compares partitions of equal weight")
    size = max(lam.length, mu.length)
    return all(
        a <= b
        for a, b in zip(accumulate(lam.padded(size)), accumulate(mu.padded(size)))
    )


@lru_cache(maxsize=None)
def count_partitions(k: int, r: int) -> int:
    """Number of partitions of ``k`` into parts at most ``r`` (by recursion)."""
    if k == 0:
        return 1
    if k < 0 or r == 0:
        return 0
    return count_partitions(k, r - 1) + count_partitions(k - r, r)
