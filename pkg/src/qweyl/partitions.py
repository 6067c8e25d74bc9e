"""Set partitions and the classical Stirling and Lah numbers.

These are used as ground truth for the algebraic side, so everything here is
computed either by brute force or by the textbook recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterator, NamedTuple

from .qpoly import ZERO, LaurentPoly

__all__ = [
    "SetPartition",
    "restricted_growth_strings",
    "set_partitions",
    "enumerate_partitions",
    "parse_partition",
    "partition_weight",
    "p_q",
    "ClassicalNumbers",
    "stirling1",
    "stirling2",
    "lah",
    "classical_numbers",
    "brute_force_classical",
]


def restricted_growth_strings(n: int, k: int | None = None) -> Iterator[tuple[int, ...]]:
    """RGS ``a_1..a_n`` with ``a_1 = 0`` and ``a_i <= 1 + max(a_1..a_(i-1))``.

    Generated in lexicographic order; with ``k`` given only strings using
    exactly ``k`` distinct values are produced.
    """
    if n == 0:
        if k in (None, 0):
            yield ()
        return

    def rec(prefix: list[int], top: int):
        i = len(prefix)
        if i == n:
            if k is None or top + 1 == k:
                yield tuple(prefix)
            return
        # not enough positions left to open the remaining blocks
        if k is not None and top + 1 + (n - i) < k:
            return
        for a in range(top + 2):
            if k is not None and a > k - 1:
                break
            prefix.append(a)
            yield from rec(prefix, max(top, a))
            prefix.pop()

    yield from rec([0], 0)


def set_partitions(n: int, k: int) -> Iterator[list[tuple[int, ...]]]:
    """Partitions of ``{1..n}`` into ``k`` blocks, as lists of sorted tuples."""
    for rgs in restricted_growth_strings(n, k):
        blocks: list[list[int]] = [[] for _ in range(k)]
        for i, a in enumerate(rgs, start=1):
            blocks[a].append(i)
        yield [tuple(b) for b in blocks]


@dataclass(frozen=True)
class SetPartition:
    """Blocks ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise ValueError("blocks must be nonempty")
        mins = [min(b) for b in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be ordered by least element")
        elems = sorted(v for b in self.blocks for v in b)
        if elems != list(range(1, len(elems) + 1)):
            raise ValueError(f"blocks must cover 1..{len(elems)} exactly once")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __str__(self):
        sep = "" if self.n <= 9 else ","
        return "|".join(sep.join(str(v) for v in b) for b in self.blocks)


def enumerate_partitions(n: int, k: int) -> list[SetPartition]:
    if not 0 <= k <= n:
        return []
    return [SetPartition(tuple(bs)) for bs in set_partitions(n, k)]


def parse_partition(text: str) -> SetPartition:
    """Parse ``"127|3|489|56"``, or the comma form used when n > 9."""
    commas = "," in text
    blocks = []
    for part in text.split("|"):
        items = part.split(",") if commas else list(part)
        blocks.append(tuple(sorted(int(v) for v in items)))
    blocks.sort(key=min)
    return SetPartition(tuple(blocks))


def partition_weight(pi: SetPartition) -> int:
    return sum(j * len(b) - 1 for j, b in enumerate(pi.blocks, start=1))


def p_q(n: int, k: int) -> LaurentPoly:
    total = ZERO
    for pi in enumerate_partitions(n, k):
        total = total + LaurentPoly.monomial(-partition_weight(pi))
    return total


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def lah(n: int, k: int) -> int:
    """Unsigned Lah numbers."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return lah(n - 1, k - 1) + (n - 1 + k) * lah(n - 1, k)


class ClassicalNumbers(NamedTuple):
    stirling1: int
    stirling2: int
    lah: int


def classical_numbers(n: int, k: int) -> ClassicalNumbers:
    """Classical numbers at ``(n, k)``; the Lah value is checked against
    ``sum_j [n, j] {j, k}`` before being returned."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    l = lah(n, k)
    cross = sum(stirling1(n, j) * stirling2(j, k) for j in range(k, n + 1))
    if cross != l:
        raise ArithmeticError(f"Lah cross identity fails at ({n}, {k})")
    return ClassicalNumbers(stirling1(n, k), stirling2(n, k), l)


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def brute_force_classical(n: int, k: int) -> ClassicalNumbers:
    """Counts by enumeration: permutations by cycles, set partitions, and
    partitions into nonempty linearly ordered blocks."""
    s1 = sum(1 for p in permutations(range(n)) if _cycle_count(p) == k)
    parts = list(set_partitions(n, k))
    s2 = len(parts)
    lah_count = 0
    for blocks in parts:
        ways = 1
        for b in blocks:
            ways *= factorial(len(b))
        lah_count += ways
    return ClassicalNumbers(s1, s2, lah_count)


def lah_closed_form(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)
