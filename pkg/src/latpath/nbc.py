"""Broken circuits, nbc-sets and the characteristic polynomial, natural order only."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from . import oracle
from .errors import DomainError
from .matroid import LpMatroid, build, count_bases, loops
from .paths import EAST, NORTH, LatticePath


def _broken_circuit_masks(M: LpMatroid, limit: int | None, ordered: bool = True) -> list[int]:
    oracle.check_guard(M.size, limit, "broken circuits")
    table = oracle.rank_table(list(M.intervals), M.size)
    found = {c & ~(c & -c) for c in oracle.circuit_masks(table, M.size, ordered=False)}
    return oracle.sort_masks(found) if ordered else list(found)


def broken_circuits(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> Iterator[frozenset[int]]:
    """``C - min(C)`` over the circuits ``C`` of ``M``, each set once."""
    for mask in _broken_circuit_masks(M, limit):
        yield oracle.from_mask(mask)


def nbc_table(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> np.ndarray:
    """Boolean table over all subsets: True for the nbc-sets."""
    return oracle.avoiding_table(_broken_circuit_masks(M, limit, ordered=False), M.size)


def nbc_sets(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> Iterator[frozenset[int]]:
    """Subsets containing no broken circuit, ordered by size then elements."""
    masks = oracle.sort_masks(oracle.iter_masks(nbc_table(M, limit)))
    for mask in masks:
        yield oracle.from_mask(mask)


def nbc_size_counts(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> list[int]:
    """``counts[i]`` = number of nbc-sets of size ``i``, for ``i = 0..r``."""
    table = nbc_table(M, limit)
    sizes = oracle.popcounts(M.size)[table]
    return np.bincount(sizes, minlength=M.r + 1).tolist()[: M.r + 1]


def char_poly_from_nbc(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> list[int]:
    """``c[d]`` = coefficient of ``lambda^d`` in ``sum_i (-1)^i nbc(M; i) lambda^(r-i)``."""
    counts = nbc_size_counts(M, limit)
    coeffs = [0] * (M.r + 1)
    for i, c in enumerate(counts):
        coeffs[M.r - i] = (-1) ** i * c
    return coeffs


def nbc_transform(M: LpMatroid) -> LpMatroid:
    """``M[P', Q]`` with ``N P = P' N``: its independent sets are the nbc-sets of ``M``."""
    if loops(M):
        raise DomainError(f"{M} has loops, so it has no nbc-sets")
    steps = M.lower.steps
    if not steps or steps[-1] != NORTH:
        raise DomainError(f"lower path of {M} does not end with a North step")
    return build((LatticePath(NORTH + steps[:-1]), M.upper))


def mobius_abs(M: LpMatroid) -> int:
    """``|mu(M)|`` as the number of bases of ``M[P*, Q*]`` with ``P = P* N``, ``Q = N Q*``."""
    if loops(M):
        raise DomainError(f"{M} has loops")
    lower, upper = M.lower.steps, M.upper.steps
    if not lower or lower[-1] != NORTH or upper[0] != NORTH:
        raise DomainError(f"{M} has rank 0 or a loop; P must end and Q start with N")
    return count_bases(build((LatticePath(lower[:-1]), LatticePath(upper[1:]))))


def east_steps_shift(M: LpMatroid) -> bool:
    """Whether the East steps of ``P'`` sit exactly one unit above those of ``P``."""
    shifted = nbc_transform(M).lower.segments(EAST)
    return shifted == {(x, y + 1) for x, y in M.lower.segments(EAST)}


def _paths_under_shifted_line(end: tuple[int, int], k: int) -> int:
    """Paths from ``(0, 1)`` to ``end`` never above ``y = x/k + 1``."""
    ex, ey = end
    if ex < 0 or ey < 1 or k * (ey - 1) > ex:
        return 0
    row = [1] * (ex + 1)  # y = 1: any x is allowed
    for y in range(2, ey + 1):
        new = [0] * (ex + 1)
        for x in range(ex + 1):
            if k * (y - 1) > x:
                continue
            new[x] = row[x] + (new[x - 1] if x else 0)
        row = new
    return row[ex]


def nbc_path_counts(k: int, n: int, i: int) -> tuple[int, int]:
    """The two path families whose sizes add up to the size-``i`` nbc count
    of the loopless k-Catalan matroid of rank ``n``."""
    base = (k + 1) * (n - 1)
    return (
        _paths_under_shifted_line((base - i + 1, i), k),
        _paths_under_shifted_line((base - i, i + 1), k),
    )
