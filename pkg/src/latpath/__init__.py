"""Lattice path matroids: bases as lattice paths, Tutte polynomials in
polynomial time, and the enumerative identities around them."""

from .bipoly import BiPoly
from .errors import (
    ConsistencyError,
    ContractError,
    DomainError,
    LatpathError,
    OracleScaleError,
    ParsePathError,
)
from .matroid import (
    LpMatroid,
    bases,
    build,
    catalan,
    count_bases,
    dual,
    from_spec,
    generalized_catalan,
    k_catalan,
    kl_catalan,
    rank,
)
from .nbc import nbc_sets, nbc_transform
from .paths import LatticePath, PathPair, count_paths_in_region, parse_path
from .series import ZSeries, tutte_gf_rhs
from .tutte import beta, char_poly, tutte_activity, tutte_corank_nullity, tutte_dp, tutte_from_word

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "ConsistencyError",
    "ContractError",
    "DomainError",
    "LatpathError",
    "LatticePath",
    "LpMatroid",
    "OracleScaleError",
    "ParsePathError",
    "PathPair",
    "ZSeries",
    "bases",
    "beta",
    "build",
    "catalan",
    "char_poly",
    "count_bases",
    "count_paths_in_region",
    "dual",
    "from_spec",
    "generalized_catalan",
    "k_catalan",
    "kl_catalan",
    "nbc_sets",
    "nbc_transform",
    "parse_path",
    "rank",
    "tutte_activity",
    "tutte_corank_nullity",
    "tutte_dp",
    "tutte_from_word",
    "tutte_gf_rhs",
]
