"""Exhaustive subset tables used by the exponential verification oracles.

Subsets of ``[n]`` are encoded as bitmasks with bit ``e - 1`` standing for
element ``e``. Every table here has ``2**n`` entries, so all entry points are
guarded by a size limit.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import OracleScaleError

ORACLE_LIMIT = 16


def check_guard(size: int, limit: int | None, what: str) -> None:
    """Refuse oracle work on more than ``limit`` elements (``None`` disables the guard)."""
    if limit is not None and size > limit:
        raise OracleScaleError(
            f"{what} is an exponential oracle limited to {limit} elements; "
            f"got {size} (pass limit=None / --force to override)"
        )


def to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for e in subset:
        mask |= 1 << (e - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)


def rank_table(intervals: list[tuple[int, int]], n: int) -> np.ndarray:
    """Rank of every subset of ``[n]`` for the interval presentation.

    Elements are scanned in increasing order and each is matched to the
    lowest-indexed unused interval containing it; because the interval ends
    increase with the index this greedy matching is maximum.
    """
    masks = np.arange(1 << n, dtype=np.int64)
    used = np.zeros(1 << n, dtype=np.int64)
    for e in range(1, n + 1):
        contain = 0
        for idx, (lo, hi) in enumerate(intervals):
            if lo <= e <= hi:
                contain |= 1 << idx
        if not contain:
            continue
        has = ((masks >> (e - 1)) & 1).astype(bool)
        avail = np.int64(contain) & ~used
        low = avail & -avail
        used = np.where(has, used | low, used)
    return np.bitwise_count(used).astype(np.int64)


def circuit_masks(ranks: np.ndarray, n: int, ordered: bool = True) -> list[int]:
    """Minimal dependent sets, ordered by size then by sorted element tuple."""
    sizes = popcounts(n)
    dep = ranks < sizes
    masks = np.arange(1 << n, dtype=np.int64)
    minimal = dep.copy()
    for e in range(n):
        has = ((masks >> e) & 1).astype(bool)
        minimal[has] &= ~dep[masks[has] ^ (1 << e)]
    found = np.nonzero(minimal)[0].tolist()
    return sort_masks(found) if ordered else found


def sort_masks(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda s: (bin(s).count("1"), sorted(from_mask(s))))


def avoiding_table(forbidden: Iterable[int], n: int) -> np.ndarray:
    """Boolean table: True where the subset contains none of the ``forbidden`` masks."""
    hit = np.zeros(1 << n, dtype=bool)
    for f in forbidden:
        hit[f] = True
    masks = np.arange(1 << n, dtype=np.int64)
    for e in range(n):
        has = ((masks >> e) & 1).astype(bool)
        hit[has] |= hit[masks[has] ^ (1 << e)]
    return ~hit


def iter_masks(table: np.ndarray) -> Iterator[int]:
    for s in np.nonzero(table)[0]:
        yield int(s)
