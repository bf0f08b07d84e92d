"""Young-diagram combinatorics: partitions, hooks, and standard-tableau counts."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Iterator

PartitionLike = Iterable[int]


def partition(parts: PartitionLike) -> tuple[int, ...]:
    """Canonical partition tuple: trailing zeros stripped, weak decrease enforced."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    if lam and lam[-1] < 0:
        raise ValueError(f"parts must be positive: {parts!r}")
    return lam


def conjugate(lam: PartitionLike) -> tuple[int, ...]:
    """Transposed diagram: column lengths become row lengths."""
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam: PartitionLike, mu: PartitionLike) -> bool:
    """True iff the diagram of ``mu`` fits inside the diagram of ``lam``."""
    lam, mu = partition(lam), partition(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def hook_lengths(lam: PartitionLike) -> list[list[int]]:
    """Hook length of every box: the box, the boxes to its right, the boxes below."""
    lam = partition(lam)
    cols = conjugate(lam)
    return [
        [(row - j) + (cols[j] - i) - 1 for j in range(row)]
        for i, row in enumerate(lam)
    ]


def hook_product(lam: PartitionLike) -> int:
    """Product of all hook lengths; 1 for the empty diagram."""
    out = 1
    for row in hook_lengths(lam):
        for h in row:
            out *= h
    return out


def syt_count(lam: PartitionLike) -> int:
    """Number of standard fillings of ``lam``: |lam|! divided by the hook product.

    Evaluated as a telescoping product of exact fractions, so intermediate
    values stay near the final count instead of near |lam|!.
    """
    hooks = sorted(h for row in hook_lengths(lam) for h in row)
    count = Fraction(1)
    for k, h in enumerate(hooks, start=1):
        count *= Fraction(k, h)
    assert count.denominator == 1, "hook product must divide the factorial"
    return int(count)


def covers_below(lam: PartitionLike) -> list[tuple[int, ...]]:
    """Partitions reached by removing one corner box, top row first."""
    lam = partition(lam)
    out = []
    for i, p in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if p > below:
            out.append(partition(lam[:i] + (p - 1,) + lam[i + 1 :]))
    return out


def covers_above(lam: PartitionLike) -> list[tuple[int, ...]]:
    """Partitions reached by adding one box, top row first, new row last."""
    lam = partition(lam)
    out = []
    for i in range(len(lam)):
        if i == 0 or lam[i] < lam[i - 1]:
            out.append(lam[:i] + (lam[i] + 1,) + lam[i + 1 :])
    out.append(lam + (1,))
    return out


def syt_count_inductive(lam: PartitionLike) -> int:
    """Standard-filling count by the one-box-removal recursion.

    Independent of :func:`syt_count`; the two must agree on every partition.
    """
    return _syt_recursive(partition(lam))


@cache
def _syt_recursive(lam: tuple[int, ...]) -> int:
    if not lam:
        return 1
    return sum(_syt_recursive(mu) for mu in covers_below(lam))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def supersets_of(mu: PartitionLike, n: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` containing ``mu``, descending lexicographic.

    Empty when ``n`` is smaller than the size of ``mu``.
    """
    mu = partition(mu)
    if n < sum(mu):
        return []
    return [lam for lam in partitions_of(n) if contains(lam, mu)]
