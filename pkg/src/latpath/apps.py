"""Applications: connected-matroid counts, the polyomino/Dyck bijection,
beta-invariant path counts and the tennis ball problem."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .closedforms import connected_count_formula
from .errors import DomainError, OracleScaleError
from .matroid import count_bases, kl_catalan
from .paths import EAST, NORTH, LatticePath, PathPair, all_path_pairs

CONNECTED_BRUTE_LIMIT = 12
BETAUD_ENUM_LIMIT = 8
TENNIS_SIM_LIMIT = 18


# -- parallelogram polyominoes ------------------------------------------------------


def _east_heights(path: LatticePath) -> list[int]:
    heights, h = [], 0
    for s in path:
        if s == NORTH:
            h += 1
        else:
            heights.append(h)
    return heights


def interiors_disjoint(pair: PathPair) -> bool:
    n = len(pair)
    return all(
        a < b for a, b in zip(pair.lower.heights[1:n], pair.upper.heights[1:n])
    )


def column_sequences(pair: PathPair) -> tuple[list[int], list[int]]:
    """Cells per column ``a`` and adjacency counts ``b`` (``b_i + 1`` cells of
    column ``i`` touch column ``i + 1``) of the polyomino between the paths."""
    if not interiors_disjoint(pair) or pair.m < 1:
        raise DomainError("bounding paths must meet only at their endpoints")
    bottoms = _east_heights(pair.lower)
    tops = _east_heights(pair.upper)
    a = [t - b for b, t in zip(bottoms, tops)]
    b = [tops[i] - bottoms[i + 1] - 1 for i in range(pair.m - 1)]
    return a, b


def polyomino_to_dyck(pair: PathPair) -> LatticePath:
    """Dyck path with peaks at heights ``a_i`` and valleys at heights ``b_i``."""
    a, b = column_sequences(pair)
    word = []
    level = 0
    for i, peak in enumerate(a):
        word.append(NORTH * (peak - level))
        valley = b[i] if i < len(b) else 0
        word.append(EAST * (peak - valley))
        level = valley
    return LatticePath("".join(word), alphabet="UD")


# -- connected lattice path matroids -------------------------------------------------


def connected_pairs(size: int) -> list[PathPair]:
    return [p for p in all_path_pairs(size) if interiors_disjoint(p)]


def _rotate(pair: PathPair) -> PathPair:
    return PathPair(pair.upper.reversal(), pair.lower.reversal())


def count_connected_lpm(size: int, brute: bool = False, limit: int | None = CONNECTED_BRUTE_LIMIT) -> int:
    """Connected lattice path matroids on ``size`` elements up to isomorphism.

    Brute force identifies each presentation ``(P, Q)`` with its rotation
    ``(Q^rho, P^rho)`` and counts classes.
    """
    if size < 2:
        raise DomainError("the count is defined for at least two elements")
    if not brute:
        return connected_count_formula(size - 1)
    if limit is not None and size > limit:
        raise OracleScaleError(f"brute-force enumeration limited to {limit} elements")
    classes = set()
    for p in connected_pairs(size):
        classes.add(min(str(p), str(_rotate(p))))
    return len(classes)


def count_symmetric_pairs(size: int) -> int:
    return sum(1 for p in connected_pairs(size) if _rotate(p) == p)


# -- beta invariant path count ---------------------------------------------------------


def betaud_border(k: int, n: int) -> LatticePath:
    """``D^(k-1) (U^k D^k)^(n-1) U^(k-1)``."""
    if k < 1 or n < 1:
        raise DomainError("k and n must be positive")
    return LatticePath(EAST * (k - 1) + (NORTH * k + EAST * k) * (n - 1) + NORTH * (k - 1), "UD")


def _ud_heights(path: LatticePath) -> list[int]:
    return [2 * h - t for t, h in enumerate(path.heights)]


def betaud_path_count(k: int, n: int) -> int:
    """U/D paths from ``(0,0)`` to ``(2(nk-1), 0)`` never below the border, by DP."""
    floor = _ud_heights(betaud_border(k, n))
    length = len(floor) - 1
    counts = {0: 1}
    for t in range(1, length + 1):
        nxt: dict[int, int] = {}
        for h, c in counts.items():
            for nh in (h + 1, h - 1):
                if nh >= floor[t] and abs(nh) <= length - t:
                    nxt[nh] = nxt.get(nh, 0) + c
        counts = nxt
    return counts.get(0, 0)


def betaud_path_count_brute(k: int, n: int, limit: int | None = BETAUD_ENUM_LIMIT) -> int:
    if limit is not None and k * n > limit:
        raise OracleScaleError(f"enumeration limited to k*n <= {limit}")
    floor = _ud_heights(betaud_border(k, n))
    length = len(floor) - 1
    total = 0
    for steps in itertools.product((1, -1), repeat=length):
        h, ok = 0, True
        for t, s in enumerate(steps, 1):
            h += s
            if h < floor[t]:
                ok = False
                break
        total += ok and h == 0
    return total


# -- tennis balls -------------------------------------------------------------------


@dataclass(frozen=True)
class TennisResult:
    count: int
    simulated: int | None

    @property
    def verified(self) -> bool:
        return self.simulated is not None and self.simulated == self.count


def tennis_ball_count(k: int, l: int, n: int) -> int:
    """Answer to the ``(k+l, l)`` tennis ball problem after ``n`` stages."""
    if k < 1 or l < 1 or n < 0:
        raise DomainError("need k, l >= 1 and n >= 0")
    return count_bases(kl_catalan(k, l, n + 1))


def simulate_tennis(k: int, l: int, n: int, limit: int | None = TENNIS_SIM_LIMIT) -> int:
    """Count reachable bin-B contents by breadth-first search over stages.

    After stage ``i`` the contents of bin A are all balls added so far minus
    bin B, so the state is just the set in bin B.
    """
    if k < 1 or l < 1 or n < 0:
        raise DomainError("need k, l >= 1 and n >= 0")
    if limit is not None and (k + l) * n > limit:
        raise OracleScaleError(f"simulation limited to (k+l)*n <= {limit}")
    states = {frozenset()}
    for stage in range(1, n + 1):
        added = frozenset(range(1, stage * (k + l) + 1))
        nxt = set()
        for in_b in states:
            for moved in itertools.combinations(sorted(added - in_b), l):
                nxt.add(in_b.union(moved))
        states = nxt
    return len(states)


def tennis_report(k: int, l: int, n: int, simulate: bool = True) -> TennisResult:
    count = tennis_ball_count(k, l, n)
    simulated = None
    if simulate and (k + l) * n <= TENNIS_SIM_LIMIT:
        simulated = simulate_tennis(k, l, n)
    return TennisResult(count, simulated)
