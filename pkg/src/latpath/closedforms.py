"""Closed-form counts and coefficient formulas over the integers.

Every division is exact; a non-zero remainder raises
:class:`~latpath.errors.ConsistencyError` because it can only come from a
transcription error.
"""

from __future__ import annotations

from math import comb as _comb

from .errors import ConsistencyError, DomainError


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return _comb(a, b)


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{num} is not divisible by {den}")
    return q


def k_catalan(k: int, n: int) -> int:
    """Paths to ``(kn, n)`` never above ``y = x/k``."""
    if k < 1 or n < 0:
        raise DomainError(f"k_catalan needs k >= 1, n >= 0 (got k={k}, n={n})")
    return exact_div(binom((k + 1) * n, n), k * n + 1)


def catalan(n: int) -> int:
    return k_catalan(1, n)


def ballot(k: int, m: int, n: int) -> int:
    """Paths to ``(m, n)`` never above ``y = x/k``, for ``m >= kn >= 0``."""
    if k < 1 or n < 0 or m < k * n:
        raise DomainError(f"ballot needs k >= 1 and m >= kn >= 0 (got k={k}, m={m}, n={n})")
    return exact_div((m - k * n + 1) * binom(m + n + 1, n), m + n + 1)


def dyck_prefix_count(n: int) -> int:
    """U/D paths of ``n`` steps that never pass below the axis."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return binom(n, (n + 1) // 2)


def catalan_power_coeff(k: int, j: int, t: int) -> int:
    """Coefficient of ``z^t`` in ``C(z)^j`` for the k-Catalan series ``C``.

    ``t = 0`` gives the constant term 1.
    """
    if t < 0:
        return 0
    if t == 0:
        return 1
    return exact_div(j * binom((k + 1) * t + j - 1, t - 1), t)


def s_count(m: int, s: int, k: int) -> int:
    """Solutions of ``l_1 + ... + l_s = m`` with every ``1 <= l_i <= k``."""
    if m == 0 and s == 0:
        return 1
    return sum((-1) ** i * binom(s, i) * binom(m - k * i - 1, s - 1) for i in range(s + 1))


def kcatalan_tutte_path_count(k: int, n: int, i: int, j: int) -> int:
    """Paths to ``(kn, n)`` not above ``y = x/k`` whose last point on the
    x-axis is ``(j, 0)`` and that return to ``y = x/k`` exactly ``i`` times."""
    if n == 0:
        return int(i == 0 and j == 0)
    if not (k <= j <= k * n and 1 <= i <= n):
        return 0
    # leave the axis at (j, 0) with a North step, then avoid the axis
    if j % k == 0:
        start_returns = 1 if j // k == 1 else 0
    else:
        start_returns = 0
    states = {(j, 1, start_returns): 1}
    # points (x, y) with y >= 1 and k*y <= x; x from j, y from 1
    for _ in range((k * n - j) + (n - 1)):
        nxt: dict[tuple[int, int, int], int] = {}
        for (x, y, ret), c in states.items():
            for nx, ny in ((x + 1, y), (x, y + 1)):
                if nx > k * n or ny > n or k * ny > nx:
                    continue
                nret = ret + (k * ny == nx)
                if nret > i:
                    continue
                key = (nx, ny, nret)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    return states.get((k * n, n, i), 0)


def tutte_coeff_kcatalan(k: int, n: int, i: int, j: int) -> int:
    """Coefficient of ``x^i y^j`` in ``t(M^k_n; x, y)``.

    Uses the algebraic sum whenever every term has a non-zero denominator
    ``n - s - i``; otherwise falls back to the equivalent lattice-path count.
    """
    if n == 0:
        return int(i == 0 and j == 0)
    if i < 1 or j < k:
        return 0
    m = j - k
    total = 0
    for s in range(m + 1):
        S = s_count(m, s, k)
        if not S:
            continue
        den = n - s - i
        if den == 0:
            return kcatalan_tutte_path_count(k, n, i, j)
        num = S * binom((k + 1) * (n - 1) - i - m, n - s - i - 1) * (s * (k + 1) - m + k * (i - 1))
        total += exact_div(num, den)
    return total


def tutte_coeff_catalan(n: int, i: int, j: int) -> int:
    """Coefficient of ``x^i y^j`` in ``t(M_n; x, y)`` for ``n > 1``; depends on ``i + j`` only."""
    if n <= 1 or i <= 0 or j <= 0:
        raise DomainError(f"formula needs n > 1 and i, j > 0 (got n={n}, i={i}, j={j})")
    return exact_div((i + j - 2) * binom(2 * n - i - j - 1, n - i - j + 1), n - 1)


def nbc_count_formula(k: int, n: int, i: int) -> int:
    """Number of size-``i`` nbc-sets of the loopless k-Catalan matroid of rank ``n``."""
    if i < 0 or i > n:
        return 0
    if i == 0:
        return 1
    if i == n:
        return k_catalan(k, n - 1)
    top = (k + 1) * (n - 1) + 2
    return exact_div(((k + 1) * (n - i - 1) + 2) * binom(top, i), top)


def beta_formula(k: int, n: int) -> int:
    """``k C_{kn-1}``."""
    if k < 1 or n < 1:
        raise DomainError("beta_formula needs k, n >= 1")
    return k * catalan(k * n - 1)


def connected_count_formula(n: int) -> int:
    """Connected lattice path matroids on ``n + 1`` elements, up to isomorphism."""
    if n < 1:
        raise DomainError("the count is stated for n + 1 >= 2 elements")
    return exact_div(catalan(n) + dyck_prefix_count(n), 2)


FORMULAS = {
    "catalan": catalan,
    "k_catalan": k_catalan,
    "ballot": ballot,
    "dyck_prefix_count": dyck_prefix_count,
    "catalan_power_coeff": catalan_power_coeff,
    "s_count": s_count,
    "tutte_coeff_kcatalan": tutte_coeff_kcatalan,
    "tutte_coeff_catalan": tutte_coeff_catalan,
    "nbc_count_formula": nbc_count_formula,
    "beta_formula": beta_formula,
    "connected_count_formula": connected_count_formula,
}
