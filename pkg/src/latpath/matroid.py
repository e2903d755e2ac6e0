"""Lattice path matroids ``M[P, Q]``.

A matroid is represented solely by its presentation, a :class:`PathPair`.
Element ``i`` of the ground set ``[m + r]`` is the ``i``-th step, and the
presentation is the interval system ``N_i = [l_i, u_i]`` where ``l_i`` is the
position of the ``i``-th North step of the upper path and ``u_i`` that of the
lower path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from . import oracle
from .errors import ContractError, ParsePathError
from .paths import (
    EAST,
    NORTH,
    LatticePath,
    PathPair,
    count_paths_in_region,
    parse_path,
    path_of_subset,
    paths_in_region,
    stays_in_region,
    subset_of_path,
)


@dataclass(frozen=True)
class LpMatroid:
    pair: PathPair

    @property
    def lower(self) -> LatticePath:
        return self.pair.lower

    @property
    def upper(self) -> LatticePath:
        return self.pair.upper

    @property
    def m(self) -> int:
        return self.pair.m

    @property
    def r(self) -> int:
        return self.pair.r

    @property
    def size(self) -> int:
        return len(self.pair)

    @property
    def ground_set(self) -> range:
        return range(1, self.size + 1)

    @cached_property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.upper.north_positions(), self.lower.north_positions()))

    def __str__(self) -> str:
        return f"M[{self.lower.render('EN')},{self.upper.render('EN')}]"


def build(pair: PathPair | tuple) -> LpMatroid:
    if not isinstance(pair, PathPair):
        lower, upper = pair
        pair = PathPair(lower, upper)
    return LpMatroid(pair)


def _word(*chunks) -> LatticePath:
    return LatticePath("".join(chunks))


# -- families -----------------------------------------------------------------


def uniform(r: int, n: int) -> LpMatroid:
    """``U_{r,n}``: every ``r``-subset of ``[n]`` is a basis."""
    if not 0 <= r <= n:
        raise ContractError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    m = n - r
    return build((_word(EAST * m, NORTH * r), _word(NORTH * r, EAST * m)))


def generalized_catalan(upper: LatticePath | str) -> LpMatroid:
    """``M[Q]``: lower path ``E^m N^r`` under the given upper path."""
    if isinstance(upper, str):
        upper = parse_path(upper)
    m, r = upper.endpoint
    return build((_word(EAST * m, NORTH * r), LatticePath(upper.steps)))


def kl_catalan(k: int, l: int, n: int) -> LpMatroid:
    """``M^{k,l}_n``, upper path ``(E^k N^l)^n``."""
    _positive(k=k, l=l)
    return generalized_catalan(_word((EAST * k + NORTH * l) * n))


def k_catalan(k: int, n: int) -> LpMatroid:
    return kl_catalan(k, 1, n)


def catalan(n: int) -> LpMatroid:
    return kl_catalan(1, 1, n)


def loopless_k_catalan(k: int, n: int) -> LpMatroid:
    """``M[(N E^k)^(n-1) N]``: the k-Catalan matroid with its loops removed."""
    _positive(k=k, n=n)
    return generalized_catalan(_word((NORTH + EAST * k) * (n - 1), NORTH))


def nkk(k: int, n: int) -> LpMatroid:
    """``N^{k,k}_n``, upper path ``(N^k E^k)^n``."""
    _positive(k=k)
    return generalized_catalan(_word((NORTH * k + EAST * k) * n))


def _positive(**values):
    for name, v in values.items():
        if v < 1:
            raise ContractError(f"{name} must be a positive integer, got {v}")


_FAMILIES = {
    "uniform": (uniform, 2),
    "catalan": (catalan, 1),
    "kcatalan": (k_catalan, 2),
    "klcatalan": (kl_catalan, 3),
    "loopless": (loopless_k_catalan, 2),
    "nkk": (nkk, 2),
}


def from_spec(text: str) -> LpMatroid:
    """Parse a family specification such as ``catalan:3`` or ``pair:EENN,NENE``.

    Accepted forms: ``uniform:r,n`` (``U_{r,n}``), ``catalan:n``,
    ``kcatalan:k,n``, ``klcatalan:k,l,n``, ``loopless:k,n``, ``nkk:k,n``,
    ``word:Q`` and ``pair:P,Q``.
    """
    tag, sep, rest = text.partition(":")
    if not sep:
        raise ParsePathError(f"family spec {text!r} lacks a ':'")
    if tag == "word":
        return generalized_catalan(parse_path(rest))
    if tag == "pair":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ParsePathError(f"pair spec needs two comma-separated paths: {text!r}")
        return build((parse_path(parts[0]), parse_path(parts[1])))
    if tag not in _FAMILIES:
        raise ParsePathError(f"unknown family {tag!r}")
    func, arity = _FAMILIES[tag]
    if not re.fullmatch(r"\d+(,\d+)*", rest):
        raise ParsePathError(f"family {tag} needs {arity} non-negative integers: {text!r}")
    args = [int(a) for a in rest.split(",")]
    if len(args) != arity:
        raise ParsePathError(f"family {tag} needs {arity} integers, got {len(args)}")
    return func(*args)


# -- bases and rank -------------------------------------------------------------


def is_basis(M: LpMatroid, subset: Iterable[int]) -> bool:
    subset = frozenset(subset)
    if len(subset) != M.r:
        raise ContractError(f"a basis has {M.r} elements, got {len(subset)}")
    return stays_in_region(path_of_subset(subset, M.size), M.pair)


def bases(M: LpMatroid) -> Iterator[frozenset[int]]:
    """Each basis once, in lexicographic order of its path (``E < N``)."""
    for path in paths_in_region(M.pair):
        yield subset_of_path(path)


def count_bases(M: LpMatroid) -> int:
    return count_paths_in_region(M.pair)


def rank(M: LpMatroid, subset: Iterable[int]) -> int:
    """Size of a maximum partial transversal of the intervals inside ``subset``."""
    used = [False] * M.r
    result = 0
    for e in sorted(set(subset)):
        if not 1 <= e <= M.size:
            raise ContractError(f"element {e} not in [1, {M.size}]")
        for idx, (lo, hi) in enumerate(M.intervals):
            if lo > e:
                break
            if hi >= e and not used[idx]:
                used[idx] = True
                result += 1
                break
    return result


def is_independent(M: LpMatroid, subset: Iterable[int]) -> bool:
    subset = set(subset)
    return rank(M, subset) == len(subset)


def loops(M: LpMatroid) -> frozenset[int]:
    """Elements lying in no interval."""
    covered = set()
    for lo, hi in M.intervals:
        covered.update(range(lo, hi + 1))
    return frozenset(e for e in M.ground_set if e not in covered)


def isthmuses(M: LpMatroid) -> frozenset[int]:
    """Elements in every basis: those whose step is forced North in every region path."""
    total = count_bases(M)
    return frozenset(
        e for e in M.ground_set if count_paths_in_region(M.pair, {e: NORTH}) == total
    )


# -- constructions ------------------------------------------------------------


def dual(M: LpMatroid) -> LpMatroid:
    """Reflect the presentation about ``y = x``; bases become complements."""
    return build((M.upper.reflect(), M.lower.reflect()))


def direct_sum(M1: LpMatroid, M2: LpMatroid) -> LpMatroid:
    return build((M1.lower + M2.lower, M1.upper + M2.upper))


def add_isthmus(M: LpMatroid) -> LpMatroid:
    return direct_sum(M, uniform(1, 1))


def is_generalized_catalan(M: LpMatroid) -> bool:
    return M.lower.steps == EAST * M.m + NORTH * M.r


def free_extension(M: LpMatroid) -> LpMatroid:
    """``M + e`` for a generalized Catalan matroid: append an East step to ``Q``."""
    _require_gc(M)
    return generalized_catalan(LatticePath(M.upper.steps + EAST))


def build_from_word(upper: LatticePath | str) -> LpMatroid:
    """Fold free extensions (``E``) and isthmus additions (``N``) from the empty matroid."""
    if isinstance(upper, str):
        upper = parse_path(upper)
    M = generalized_catalan(LatticePath())
    for step in upper:
        M = free_extension(M) if step == EAST else add_isthmus(M)
    return M


def meeting_points(M: LpMatroid) -> list[int]:
    """Prefix lengths at which the bounding paths are at the same point."""
    return [
        t for t, (a, b) in enumerate(zip(M.lower.heights, M.upper.heights)) if a == b
    ]


def is_connected(M: LpMatroid) -> bool:
    return meeting_points(M) == sorted({0, M.size})


def components(M: LpMatroid) -> list[LpMatroid]:
    """Split at interior meeting points; the direct sum of the parts is ``M``."""
    cuts = meeting_points(M)
    parts = []
    for a, b in zip(cuts, cuts[1:]):
        parts.append(build((LatticePath(M.lower.steps[a:b]), LatticePath(M.upper.steps[a:b]))))
    return parts


# -- circuits and generalized Catalan path tests ------------------------------------


def circuits(M: LpMatroid, limit: int | None = oracle.ORACLE_LIMIT) -> Iterator[frozenset[int]]:
    """All minimal dependent sets, by exhaustive rank queries."""
    oracle.check_guard(M.size, limit, "circuits")
    table = oracle.rank_table(list(M.intervals), M.size)
    for mask in oracle.circuit_masks(table, M.size):
        yield oracle.from_mask(mask)


def _require_gc(M: LpMatroid):
    if not is_generalized_catalan(M):
        raise ContractError(f"{M} is not a generalized Catalan matroid")


def _prefix_heights(subset: frozenset[int], size: int) -> list[int]:
    return list(path_of_subset(subset, size).heights)


def gc_circuit_test(M: LpMatroid, subset: Iterable[int]) -> bool:
    """Circuit test for ``M[Q]``: the step at the largest element is the only
    North step of the subset's path that lies above ``Q``."""
    _require_gc(M)
    subset = frozenset(subset)
    if not subset:
        return False
    hs = _prefix_heights(subset, M.size)
    hq = M.upper.heights
    above = [t for t in subset if hs[t] > hq[t]]
    return above == [max(subset)]


def gc_independence_test(M: LpMatroid, subset: Iterable[int]) -> bool:
    """Independence test for ``M[Q]``: the subset's path never goes above ``Q``."""
    _require_gc(M)
    hs = _prefix_heights(frozenset(subset), M.size)
    return all(h <= q for h, q in zip(hs, M.upper.heights))
