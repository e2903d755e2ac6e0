"""Oracle-agreement suite behind ``latpath verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; nothing here raises on a mismatch,
so a single run reports every failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from . import apps, closedforms, oracle
from .matroid import (
    LpMatroid,
    count_bases,
    dual,
    k_catalan,
    kl_catalan,
    loopless_k_catalan,
    loops,
    nkk,
)
from .nbc import char_poly_from_nbc, mobius_abs, nbc_size_counts, nbc_table, nbc_transform
from .paths import all_path_pairs, random_path_pair
from .series import tutte_gf_rhs
from .tutte import beta, char_poly, tutte_activity, tutte_corank_nullity, tutte_dp


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


@dataclass
class Suite:
    """Shared inputs; the exhaustive matroid list and its DP polynomials are built once."""

    max_size: int = 10
    random_pairs: int = 200
    random_max_size: int = 14
    seed: int = 20030101
    _dp: dict = field(default_factory=dict, repr=False)

    @cached_property
    def exhaustive(self) -> list[LpMatroid]:
        return [LpMatroid(p) for n in range(self.max_size + 1) for p in all_path_pairs(n)]

    @cached_property
    def loopless(self) -> list[LpMatroid]:
        return [M for M in self.exhaustive if M.size and not loops(M)]

    @cached_property
    def randoms(self) -> list[LpMatroid]:
        rng = random.Random(self.seed)
        return [
            LpMatroid(random_path_pair(rng.randint(0, self.random_max_size), rng))
            for _ in range(self.random_pairs)
        ]

    def dp(self, M: LpMatroid):
        if M not in self._dp:
            self._dp[M] = tutte_dp(M)
        return self._dp[M]

    # -- criteria --------------------------------------------------------------

    def triple_agreement(self) -> tuple[bool, str]:
        bad = []
        for M in self.exhaustive + self.randoms:
            t = self.dp(M)
            if t != tutte_activity(M) or t != tutte_corank_nullity(M):
                bad.append(str(M))
        n = len(self.exhaustive) + len(self.randoms)
        return not bad, f"{n} matroids, {len(bad)} disagreements {bad[:3]}"

    def m22_sequence(self) -> tuple[bool, str]:
        got = [count_bases(kl_catalan(2, 2, n)) for n in range(1, 7)]
        via_dp = [self.dp(kl_catalan(2, 2, n)).eval_at(1, 1) for n in range(1, 7)]
        want = [1, 6, 53, 554, 6362, 77580]
        return got == want == via_dp, f"{via_dp}"

    def kcatalan_counts(self) -> tuple[bool, str]:
        bad = [
            (k, n)
            for k in range(1, 4)
            for n in range(0, 9)
            if self.dp(k_catalan(k, n)).eval_at(1, 1) != closedforms.k_catalan(k, n)
        ]
        return not bad, f"k<=3, n<=8, mismatches {bad}"

    def coefficient_formulas(self) -> tuple[bool, str]:
        bad = []
        checked = 0
        for k in range(1, 4):
            for n in range(0, 7):
                t = self.dp(k_catalan(k, n))
                for i in range(0, n + 2):
                    for j in range(0, k * n + 2):
                        checked += 1
                        if closedforms.tutte_coeff_kcatalan(k, n, i, j) != t.coefficient(i, j):
                            bad.append(("kcat", k, n, i, j))
                        if k == 1 and n > 1 and i > 0 and j > 0:
                            if closedforms.tutte_coeff_catalan(n, i, j) != t.coefficient(i, j):
                                bad.append(("cat", n, i, j))
        return not bad, f"{checked} coefficients, mismatches {bad[:5]}"

    def generating_function(self) -> tuple[bool, str]:
        bad = []
        for k in (1, 2, 3):
            series = tutte_gf_rhs(k, 6)
            bad += [(k, n) for n in range(7) if series[n] != self.dp(k_catalan(k, n))]
        return not bad, f"k in 1..3, n <= 6, mismatches {bad}"

    def duality(self) -> tuple[bool, str]:
        bad = [str(M) for M in self.exhaustive if tutte_dp(dual(M)) != self.dp(M).swap()]
        asym = [
            (k, n)
            for k in (1, 2)
            for n in range(0, 6)
            if self.dp(kl_catalan(k, k, n)) != self.dp(kl_catalan(k, k, n)).swap()
        ]
        return not bad and not asym, f"{len(self.exhaustive)} duals, {len(bad)} failures; asymmetric {asym}"

    def characteristic_polynomial(self) -> tuple[bool, str]:
        bad_nbc = [str(M) for M in self.loopless if char_poly_from_nbc(M) != char_poly(M, self.dp(M))]
        bad_formula = []
        bad_mu = []
        for k in (1, 2):
            for n in range(1, 6):
                M = loopless_k_catalan(k, n)
                counts = nbc_size_counts(M)
                if counts != [closedforms.nbc_count_formula(k, n, i) for i in range(n + 1)]:
                    bad_formula.append((k, n))
                if abs(char_poly(M)[0]) != closedforms.k_catalan(k, n - 1) or mobius_abs(M) != closedforms.k_catalan(k, n - 1):
                    bad_mu.append((k, n))
        bad_linear = [
            n
            for n in range(1, 8)
            if abs(char_poly(loopless_k_catalan(1, n))[1]) != closedforms.catalan(n)
        ]
        ok = not (bad_nbc or bad_formula or bad_mu or bad_linear)
        return ok, (
            f"{len(self.loopless)} loopless: {len(bad_nbc)} nbc mismatches; "
            f"formula {bad_formula}; mu {bad_mu}; linear term {bad_linear}"
        )

    def beta_invariant(self) -> tuple[bool, str]:
        bad = []
        for k in range(1, 4):
            for n in range(1, 8):
                if k * n > 7:
                    continue
                values = (beta(nkk(k, n)), closedforms.beta_formula(k, n), apps.betaud_path_count(k, n))
                if len(set(values)) != 1:
                    bad.append((k, n, values))
        return not bad, f"k<=3, kn<=7, mismatches {bad}"

    def connected_enumeration(self) -> tuple[bool, str]:
        bad = [
            size
            for size in range(2, 10)
            if apps.count_connected_lpm(size, brute=True) != closedforms.connected_count_formula(size - 1)
        ]
        bad_dyck = []
        for size in range(2, 9):
            image = {apps.polyomino_to_dyck(p) for p in apps.connected_pairs(size)}
            if len(image) != len(apps.connected_pairs(size)) or len(image) != closedforms.catalan(size - 1):
                bad_dyck.append(size)
        return not bad and not bad_dyck, f"class counts bad {bad}; polyomino bad {bad_dyck}"

    def tennis(self) -> tuple[bool, str]:
        bad = []
        cases = 0
        for k in range(1, 18):
            for l in range(1, 18):
                n = 0
                while (k + l) * (n + 1) <= 18:
                    cases += 1
                    if apps.simulate_tennis(k, l, n, limit=None) != apps.tennis_ball_count(k, l, n):
                        bad.append((k, l, n))
                    n += 1
        return not bad, f"{cases} cases, mismatches {bad}"

    def nbc_transform(self) -> tuple[bool, str]:
        bad = []
        for M in self.loopless:
            T = nbc_transform(M)
            independent = oracle.rank_table(list(T.intervals), T.size) == oracle.popcounts(T.size)
            if not np.array_equal(nbc_table(M), independent):
                bad.append(str(M))
        return not bad, f"{len(self.loopless)} loopless matroids, {len(bad)} mismatches {bad[:3]}"

    def performance(self, n: int = 200, budget: float = 60.0) -> tuple[bool, str]:
        M = kl_catalan(1, 1, n)
        start = time.perf_counter()
        t = tutte_dp(M)
        elapsed = time.perf_counter() - start
        ok = elapsed < budget and t.eval_at(1, 1) == closedforms.catalan(n)
        try:
            tutte_corank_nullity(M)
            refused = False
        except oracle.OracleScaleError:
            refused = True
        return ok and refused, f"M_{n} DP in {elapsed:.1f}s (budget {budget}s), subset oracle refused={refused}"

    def checks(self) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
        return [
            ("1 oracle triple agreement", self.triple_agreement),
            ("2 M^{2,2}_n basis counts", self.m22_sequence),
            ("3 k-Catalan basis counts", self.kcatalan_counts),
            ("4 Tutte coefficient formulas", self.coefficient_formulas),
            ("5 generating function", self.generating_function),
            ("6 duality and symmetry", self.duality),
            ("7 characteristic polynomial", self.characteristic_polynomial),
            ("8 beta invariant", self.beta_invariant),
            ("9 connected enumeration", self.connected_enumeration),
            ("10 tennis ball", self.tennis),
            ("11 nbc transform", self.nbc_transform),
            ("12 polynomial-time DP", self.performance),
        ]


def run_check(name: str, func: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = func()
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def run(quick: bool = False, max_size: int = 10, report: Callable[[str], None] | None = None) -> list[CheckResult]:
    """Run every check; ``quick`` keeps the exhaustive part and skips the
    random pairs and the large DP benchmark."""
    suite = Suite(max_size=max_size, random_pairs=0 if quick else 200)
    results = []
    for name, func in suite.checks():
        if quick and func == suite.performance:
            continue
        res = run_check(name, func)
        if report:
            report(res.line())
        results.append(res)
    return results
