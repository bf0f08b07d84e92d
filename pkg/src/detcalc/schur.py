"""Schur-polynomial machinery over sequences of graded ring classes.

A class sequence is a list ``s[0], s[1], ..., s[D]`` of classes on one
ambient space with ``s[0] = 1`` and ``s[k]`` homogeneous of degree ``k``;
indices outside the list are zero by convention.
"""

from __future__ import annotations

from .chow import ChowClass
from .partitions import PartitionLike, covers_above, partition


def s_from_c(cseq: list[ChowClass]) -> list[ChowClass]:
    """Solve ``(sum c_i t^i) * (sum (-1)^j s_j t^j) = 1`` for the ``s_j``.

    The transform is an involution: applying it to the result returns the
    input, truncated at the ambient dimension.
    """
    if not cseq or cseq[0] != 1:
        raise ValueError("sequence must start with the unit class")
    space = cseq[0].ambient
    out = [space.one()]
    for k in range(1, space.dim + 1):
        acc = space.zero()
        for j in range(k):
            c = cseq[k - j] if k - j < len(cseq) else space.zero()
            term = c * out[j]
            acc = acc + (term if j % 2 == 0 else -term)
        out.append(acc if (k + 1) % 2 == 0 else -acc)
    return out


def _entry(seq: list[ChowClass], idx: int, space) -> ChowClass:
    if idx == 0:
        return space.one()
    if 0 < idx < len(seq):
        return seq[idx]
    return space.zero()


def schur(lam: PartitionLike, seq: list[ChowClass]) -> ChowClass:
    """Determinant ``det(s[lam_i - i + j])`` over the given sequence.

    Padding ``lam`` with zeros does not change the result.  Expanded by
    cofactors with memoized minors; the matrices stay small (rows of the
    partition), so no elimination is needed.
    """
    lam = partition(lam)
    if not seq:
        raise ValueError("sequence must start with the unit class")
    space = seq[0].ambient
    k = len(lam)
    if k == 0:
        return space.one()

    minors: dict[tuple[int, tuple[int, ...]], ChowClass] = {}

    def minor(row: int, cols: tuple[int, ...]) -> ChowClass:
        if row == k:
            return space.one()
        key = (row, cols)
        found = minors.get(key)
        if found is not None:
            return found
        acc = space.zero()
        for pos, col in enumerate(cols):
            entry = _entry(seq, lam[row] - row + col, space)
            if entry.is_zero():
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * rest
            acc = acc + (term if pos % 2 == 0 else -term)
        minors[key] = acc
        return acc

    return minor(0, tuple(range(k)))


def pieri_expand(lam: PartitionLike) -> list[tuple[int, ...]]:
    """Index set of the degree-one Pieri product: add one box in every valid spot."""
    return covers_above(lam)
