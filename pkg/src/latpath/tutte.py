"""Tutte polynomial engines for lattice path matroids.

Three independent routes are provided:

* :func:`tutte_dp`, the production engine: a dynamic program over the lattice
  points of the region, ``O((m+1)(r+1))`` polynomial operations;
* :func:`tutte_activity`, the sum of ``x^i(B) y^e(B)`` over all bases, with
  activities read off geometrically;
* :func:`tutte_corank_nullity`, the subset expansion over all ``2^(m+r)`` subsets.

:func:`tutte_from_word` folds the isthmus and free-extension rules over the
upper path of a generalized Catalan matroid.
"""

from __future__ import annotations

from math import comb

import numpy as np

from . import oracle
from .bipoly import ONE, BiPoly
from .errors import ConsistencyError, ContractError, OracleScaleError
from .matroid import LpMatroid, bases, count_bases, is_basis
from .paths import EAST, NORTH, LatticePath, parse_path, path_of_subset

BASIS_LIMIT = 500_000


# -- activities ---------------------------------------------------------------


def activities(M: LpMatroid, basis) -> tuple[int, int]:
    """``(internal, external)`` activity of a basis in the natural order.

    Internal activity counts the North segments the basis path shares with the
    upper path; external activity counts the East segments it shares with the
    lower path. Segments are compared as geometric objects.
    """
    basis = frozenset(basis)
    if len(basis) != M.r or not is_basis(M, basis):
        raise ContractError(f"{sorted(basis)} is not a basis of {M}")
    path = path_of_subset(basis, M.size)
    internal = len(path.segments(NORTH) & M.upper.segments(NORTH))
    external = len(path.segments(EAST) & M.lower.segments(EAST))
    return internal, external


def activities_by_definition(M: LpMatroid, basis, basis_set=None) -> tuple[int, int]:
    """Activities straight from the exchange definition (oracle for :func:`activities`).

    ``e`` outside ``B`` is externally active when no smaller ``b`` in ``B`` has
    ``B - b + e`` a basis; ``b`` in ``B`` is internally active when no smaller
    ``e`` outside ``B`` has ``B - b + e`` a basis.
    """
    B = frozenset(basis)
    if basis_set is None:
        basis_set = set(bases(M))
    if B not in basis_set:
        raise ContractError(f"{sorted(B)} is not a basis of {M}")
    outside = [e for e in M.ground_set if e not in B]
    external = sum(
        1
        for e in outside
        if not any((B - {b}) | {e} in basis_set for b in B if b < e)
    )
    internal = sum(
        1
        for b in B
        if not any((B - {b}) | {e} in basis_set for e in outside if e < b)
    )
    return internal, external


def _activity_histogram(M: LpMatroid) -> dict[tuple[int, int], int]:
    """Enumerate every basis path, counting shared segments along the way.

    A step of the basis path starting at ``(t - h, h)`` is shared with a
    bounding path when that path also starts its ``t``-th step at the same
    point in the same direction.
    """
    lo_h, hi_h = M.lower.heights, M.upper.heights
    low_east = {t for t, s in enumerate(M.lower) if s == EAST}
    up_north = {t for t, s in enumerate(M.upper) if s == NORTH}
    n = M.size
    hist: dict[tuple[int, int], int] = {}
    stack = [(0, 0, 0, 0)]
    while stack:
        t, h, i, e = stack.pop()
        if t == n:
            hist[(i, e)] = hist.get((i, e), 0) + 1
            continue
        if h >= lo_h[t + 1]:
            shared = t in low_east and h == lo_h[t]
            stack.append((t + 1, h, i, e + shared))
        if h + 1 <= hi_h[t + 1]:
            shared = t in up_north and h == hi_h[t]
            stack.append((t + 1, h + 1, i + shared, e))
    return hist


def tutte_activity(M: LpMatroid, limit: int | None = BASIS_LIMIT) -> BiPoly:
    """Basis-activity expansion of the Tutte polynomial."""
    if limit is not None:
        n_bases = count_bases(M)
        if n_bases > limit:
            raise OracleScaleError(
                f"activity oracle limited to {limit} bases; {M} has {n_bases}"
            )
    return BiPoly(_activity_histogram(M))


# -- corank-nullity ---------------------------------------------------------------


def _shifted_powers(n: int) -> list[list[int]]:
    """Coefficients of ``(t - 1)^a`` for ``a = 0..n``."""
    return [[comb(a, i) * (-1) ** (a - i) for i in range(a + 1)] for a in range(n + 1)]


def tutte_corank_nullity(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> BiPoly:
    """``sum over A of (x-1)^(r(M)-r(A)) (y-1)^(|A|-r(A))`` over every subset ``A``."""
    oracle.check_guard(M.size, limit, "corank-nullity expansion")
    n = M.size
    ranks = oracle.rank_table(list(M.intervals), n)
    sizes = oracle.popcounts(n)
    corank = M.r - ranks
    nullity = sizes - ranks
    keys, counts = np.unique(corank * (n + 1) + nullity, return_counts=True)
    powers = _shifted_powers(n)
    terms: dict[tuple[int, int], int] = {}
    for key, count in zip(keys.tolist(), counts.tolist()):
        a, b = divmod(key, n + 1)
        for i, ci in enumerate(powers[a]):
            for j, cj in enumerate(powers[b]):
                terms[(i, j)] = terms.get((i, j), 0) + count * ci * cj
    return BiPoly(terms)


# -- dynamic program ----------------------------------------------------------------


def _grow(a: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    if a.shape == shape:
        return a
    out = np.zeros(shape, dtype=object)
    out[: a.shape[0], : a.shape[1]] = a
    return out


def _times_x(a: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + 1, a.shape[1]), dtype=object)
    out[1:] = a
    return out


def _times_y(a: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0], a.shape[1] + 1), dtype=object)
    out[:, 1:] = a
    return out


def _plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    shape = (max(a.shape[0], b.shape[0]), max(a.shape[1], b.shape[1]))
    return _grow(a, shape) + _grow(b, shape)


def _dense_to_bipoly(a: np.ndarray) -> BiPoly:
    return BiPoly(
        ((i, j), int(a[i, j])) for i, j in zip(*np.nonzero(a != 0))
    )


def tutte_dp(M: LpMatroid) -> BiPoly:
    """Tutte polynomial by the lattice-point recurrence.

    ``f(0,0) = 1``; a point reachable from both its west and south neighbours
    takes their sum; a point reachable only from the west (an East step of the
    lower path) takes ``y`` times the west value; reachable only from the
    south (a North step of the upper path), ``x`` times the south value.
    Columns are swept left to right and only the previous column is kept.
    Each ``f`` is a dense array indexed by ``(x-degree, y-degree)``.
    """
    bounds = M.pair.column_bounds
    prev: list[np.ndarray] = []
    prev_lo = prev_hi = -1
    for x, (lo, hi) in enumerate(bounds):
        col: list[np.ndarray] = []
        for y in range(lo, hi + 1):
            west = prev[y - prev_lo] if x > 0 and prev_lo <= y <= prev_hi else None
            south = col[-1] if y > lo else None
            if west is not None and south is not None:
                f = _plus(west, south)
            elif west is not None:
                f = _times_y(west)
            elif south is not None:
                f = _times_x(south)
            else:
                f = np.ones((1, 1), dtype=object)
            col.append(f)
        prev, prev_lo, prev_hi = col, lo, hi
    return _dense_to_bipoly(prev[-1])


# -- free-extension fold ------------------------------------------------------------


def free_extension_tutte(t: BiPoly) -> BiPoly:
    """Tutte polynomial of ``M + e`` from that of ``M``.

    ``t(M+e) = x (t - t(1,y)) / (x - 1) + y t(1,y)``, computed by exact
    division by ``x - 1`` so the result stays in ``Z[x, y]``.
    """
    at_one = t.at_x_one()
    quotient, remainder = (t - at_one).shift(1, 0).div_x_minus_one()
    if not remainder.is_zero():
        raise ConsistencyError(f"x - 1 does not divide x*(t - t(1,y)); remainder {remainder}")
    return quotient + at_one.shift(0, 1)


def tutte_from_word(upper: LatticePath | str) -> BiPoly:
    """Tutte polynomial of the generalized Catalan matroid ``M[Q]``.

    ``N`` adds an isthmus (multiply by ``x``); ``E`` takes a free extension.
    """
    if isinstance(upper, str):
        upper = parse_path(upper)
    t = ONE
    for step in upper:
        t = t.shift(1, 0) if step == NORTH else free_extension_tutte(t)
    return t


# -- derived invariants ---------------------------------------------------------------


def beta(M: LpMatroid, tutte: BiPoly | None = None) -> int:
    """Crapo's beta invariant: the coefficient of ``x`` in the Tutte polynomial.

    For two or more elements the coefficients of ``x`` and ``y`` are checked
    to agree, and to vanish when ``M`` has a loop or an isthmus. On a single
    element the coefficient of ``x`` is returned (1 for an isthmus, 0 for a loop).
    """
    t = tutte if tutte is not None else tutte_dp(M)
    bx = t.coefficient(1, 0)
    if M.size < 2:
        return bx
    by = t.coefficient(0, 1)
    if bx != by:
        raise ConsistencyError(f"coefficients of x ({bx}) and y ({by}) differ for {M}")
    lower, upper = M.lower.heights, M.upper.heights
    shared = any(
        lower[t] == upper[t] and lower[t + 1] == upper[t + 1] for t in range(M.size)
    )
    if shared and bx != 0:
        raise ConsistencyError(f"{M} has a loop or isthmus but beta = {bx}")
    return bx


def char_poly(M: LpMatroid, tutte: BiPoly | None = None) -> list[int]:
    """Coefficients ``c[d]`` of ``lambda^d`` in ``(-1)^r t(M; 1 - lambda, 0)``."""
    t = tutte if tutte is not None else tutte_dp(M)
    coeffs = [0] * (M.r + 1)
    sign = (-1) ** M.r
    for (i, j), c in t.items():
        if j:
            continue
        for d in range(i + 1):
            coeffs[d] += sign * c * comb(i, d) * (-1) ** d
    return coeffs
