"""Lattice paths, bounding pairs and the subset/path correspondence.

Paths are words over ``E`` (East, ``(1, 0)``) and ``N`` (North, ``(0, 1)``).
Words over ``U``/``D`` are accepted as input and stored in the same internal
form with ``U -> N`` and ``D -> E``; the original alphabet is kept so that
rendering round-trips.

Ground-set elements are 1-based: element ``i`` is the ``i``-th step.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ContractError, ParsePathError

EAST = "E"
NORTH = "N"

_ALPHABETS = {
    "EN": {"E": EAST, "N": NORTH},
    "UD": {"D": EAST, "U": NORTH},
}
_RENDER = {
    "EN": {EAST: "E", NORTH: "N"},
    "UD": {EAST: "D", NORTH: "U"},
}


@dataclass(frozen=True)
class LatticePath:
    """An immutable word over ``{E, N}``.

    ``alphabet`` only records how the path was written (``"EN"`` or ``"UD"``)
    and does not take part in equality.
    """

    steps: str = ""
    alphabet: str = field(default="EN", compare=False)

    def __post_init__(self):
        bad = set(self.steps) - {EAST, NORTH}
        if bad:
            raise ParsePathError(f"internal steps must be E/N, got {sorted(bad)}")
        if self.alphabet not in _ALPHABETS:
            raise ParsePathError(f"unknown alphabet {self.alphabet!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __add__(self, other: LatticePath) -> LatticePath:
        return LatticePath(self.steps + other.steps, self.alphabet)

    def __str__(self) -> str:
        return self.render()

    @cached_property
    def endpoint(self) -> tuple[int, int]:
        north = self.steps.count(NORTH)
        return len(self.steps) - north, north

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Number of North steps in each prefix, for prefix lengths 0..len."""
        return (0,) + tuple(itertools.accumulate(s == NORTH for s in self.steps))

    def points(self) -> list[tuple[int, int]]:
        """The lattice points visited, starting with the origin."""
        return [(t - h, h) for t, h in enumerate(self.heights)]

    def segments(self, step: str) -> set[tuple[int, int]]:
        """Start points of the steps of the given kind."""
        pts = self.points()
        return {pts[t] for t, s in enumerate(self.steps) if s == step}

    def north_positions(self) -> list[int]:
        """1-based indices of the North steps."""
        return [i for i, s in enumerate(self.steps, 1) if s == NORTH]

    def reversal(self) -> LatticePath:
        return LatticePath(self.steps[::-1], self.alphabet)

    def reflect(self) -> LatticePath:
        """Reflection about ``y = x``: swap East and North."""
        return LatticePath(self.steps.translate(str.maketrans("EN", "NE")), self.alphabet)

    def render(self, alphabet: str | None = None) -> str:
        table = _RENDER[alphabet or self.alphabet]
        return "".join(table[s] for s in self.steps)


def parse_path(text: str) -> LatticePath:
    """Parse a single token over ``{E, N}`` or ``{U, D}``.

    >>> parse_path("ENEN").endpoint
    (2, 2)
    >>> parse_path("UUD").render()
    'UUD'
    """
    alphabet = None
    out = []
    for i, ch in enumerate(text):
        owner = next((a for a, table in _ALPHABETS.items() if ch in table), None)
        if owner is None:
            raise ParsePathError(f"unknown step {ch!r} at index {i}", i)
        if alphabet is None:
            alphabet = owner
        elif owner != alphabet:
            raise ParsePathError(
                f"step {ch!r} at index {i} mixes alphabets {alphabet} and {owner}", i
            )
        out.append(_ALPHABETS[owner][ch])
    return LatticePath("".join(out), alphabet or "EN")


def path_of_subset(subset: Iterable[int], size: int) -> LatticePath:
    """The word whose ``i``-th step is North exactly when ``i`` is in the subset."""
    members = set(subset)
    if members and (min(members) < 1 or max(members) > size):
        raise ContractError(f"subset {sorted(members)} not contained in [1, {size}]")
    return LatticePath("".join(NORTH if i in members else EAST for i in range(1, size + 1)))


def subset_of_path(path: LatticePath) -> frozenset[int]:
    return frozenset(path.north_positions())


@dataclass(frozen=True)
class PathPair:
    """Bounding paths ``(P, Q)`` with ``P`` never above ``Q``.

    Validation is eager; every later operation assumes a valid pair.
    """

    lower: LatticePath
    upper: LatticePath

    def __post_init__(self):
        if isinstance(self.lower, str):
            object.__setattr__(self, "lower", parse_path(self.lower))
        if isinstance(self.upper, str):
            object.__setattr__(self, "upper", parse_path(self.upper))
        if self.lower.endpoint != self.upper.endpoint:
            raise ContractError(
                f"endpoints differ: {self.lower.endpoint} vs {self.upper.endpoint}"
            )
        for t, (hp, hq) in enumerate(zip(self.lower.heights, self.upper.heights)):
            if hp > hq:
                raise ContractError(f"lower path goes above upper path after {t} steps")

    @property
    def m(self) -> int:
        return self.lower.endpoint[0]

    @property
    def r(self) -> int:
        return self.lower.endpoint[1]

    def __len__(self) -> int:
        return len(self.lower)

    def __str__(self) -> str:
        return f"{self.lower.render('EN')},{self.upper.render('EN')}"

    @cached_property
    def column_bounds(self) -> tuple[tuple[int, int], ...]:
        """For each ``x = 0..m`` the range ``(lo, hi)`` of heights inside the region."""
        lo = [0]
        h = 0
        for s in self.lower:
            if s == NORTH:
                h += 1
            else:
                lo.append(h)
        hi = []
        h = 0
        for s in self.upper:
            if s == NORTH:
                h += 1
            else:
                hi.append(h)
        hi.append(self.r)
        return tuple(zip(lo, hi))

    def contains_point(self, x: int, y: int) -> bool:
        if not 0 <= x <= self.m:
            return False
        lo, hi = self.column_bounds[x]
        return lo <= y <= hi


def stays_in_region(path: LatticePath, region: PathPair) -> bool:
    """True iff ``path`` never goes below ``region.lower`` nor above ``region.upper``."""
    if len(path) != len(region) or path.endpoint != region.lower.endpoint:
        raise ContractError(
            f"path of length {len(path)} ending at {path.endpoint} does not match "
            f"region of length {len(region)} ending at {region.lower.endpoint}"
        )
    return all(
        lo <= h <= hi
        for lo, h, hi in zip(region.lower.heights, path.heights, region.upper.heights)
    )


def count_paths_in_region(region: PathPair, forced: dict[int, str] | None = None) -> int:
    """Number of monotone paths from the origin to ``(m, r)`` inside the region.

    ``forced`` optionally pins step ``i`` (1-based) to ``"E"`` or ``"N"``;
    it is how loops and isthmuses are decided without enumeration.
    """
    forced = forced or {}
    lo_h, hi_h = region.lower.heights, region.upper.heights
    counts = {0: 1}
    for t in range(1, len(region) + 1):
        step = forced.get(t)
        nxt = {}
        for h in range(lo_h[t], hi_h[t] + 1):
            total = 0
            if step != NORTH:
                total += counts.get(h, 0)
            if step != EAST:
                total += counts.get(h - 1, 0)
            if total:
                nxt[h] = total
        counts = nxt
    return counts.get(region.r, 0)


def paths_in_region(region: PathPair) -> Iterator[LatticePath]:
    """All paths inside the region, in lexicographic order with ``E < N``."""
    lo_h, hi_h = region.lower.heights, region.upper.heights
    n = len(region)
    word: list[str] = []

    def extend(t: int, h: int):
        if t == n:
            yield LatticePath("".join(word))
            return
        for step, dh in ((EAST, 0), (NORTH, 1)):
            if lo_h[t + 1] <= h + dh <= hi_h[t + 1]:
                word.append(step)
                yield from extend(t + 1, h + dh)
                word.pop()

    yield from extend(0, 0)


def all_paths(length: int) -> Iterator[LatticePath]:
    for word in itertools.product((EAST, NORTH), repeat=length):
        yield LatticePath("".join(word))


def all_path_pairs(length: int) -> Iterator[PathPair]:
    """Every valid bounding pair of the given length, over all endpoints."""
    by_end: dict[int, list[LatticePath]] = {}
    for p in all_paths(length):
        by_end.setdefault(p.endpoint[1], []).append(p)
    for paths in by_end.values():
        for lower in paths:
            for upper in paths:
                if all(a <= b for a, b in zip(lower.heights, upper.heights)):
                    yield PathPair(lower, upper)


def random_path_pair(length: int, rng: random.Random, north: int | None = None) -> PathPair:
    """Pointwise min/max of two uniform paths with a common endpoint."""
    if north is None:
        north = rng.randint(0, length)
    words = []
    for _ in range(2):
        w = [NORTH] * north + [EAST] * (length - north)
        rng.shuffle(w)
        words.append(LatticePath("".join(w)))
    hs = [p.heights for p in words]
    lo = [min(a, b) for a, b in zip(*hs)]
    hi = [max(a, b) for a, b in zip(*hs)]
    return PathPair(_path_from_heights(lo), _path_from_heights(hi))


def _path_from_heights(heights) -> LatticePath:
    return LatticePath("".join(NORTH if b > a else EAST for a, b in zip(heights, heights[1:])))
