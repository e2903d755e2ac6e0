from functools import lru_cache

from latpath.matroid import LpMatroid, loops
from latpath.paths import all_path_pairs


@lru_cache(maxsize=None)
def exhaustive_matroids(max_size: int = 10) -> tuple[LpMatroid, ...]:
    return tuple(LpMatroid(p) for n in range(max_size + 1) for p in all_path_pairs(n))


@lru_cache(maxsize=None)
def loopless_matroids(max_size: int = 10) -> tuple[LpMatroid, ...]:
    return tuple(M for M in exhaustive_matroids(max_size) if M.size and not loops(M))
