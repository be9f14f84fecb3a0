"""End-to-end validation runs shared by the acceptance tests and ``solvcore selftest``.

Each check returns a CheckResult; sizes are parameters so the CLI can run a
quick subset and the test suite the full one.
"""
from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import magnus, oracle, solvable, wreath
from .groups import (FiniteCyclic, FreeAbelian, FreeSolvable, abelianization, cross_checking,
                     key)
from .magnus import GroupRingElement
from .words import IDENTITY, Word, commutator, conj_by, random_word, words_up_to


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    data: Dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(name: str, fn: Callable[[], tuple]) -> CheckResult:
    t0 = time.perf_counter()
    passed, detail, data = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - t0, data)


def _random_length_word(rng, r, max_len, min_len=0):
    return random_word(r, rng.randint(min_len, max_len), rng)


# ---------------------------------------------------------------- 1

def finite_wreath_equivalence(cases=((2, 3), (2, 4), (3, 2))) -> CheckResult:
    def run():
        mismatches = conjugate = pairs = bad_witness = 0
        for m, n in cases:
            A, B = FiniteCyclic(m), FiniteCyclic(n)
            T = oracle.enumerate_finite_wreath(A, B)
            els = [oracle.to_element(T, i) for i in range(len(T))]
            for i, x in enumerate(els):
                for j, y in enumerate(els):
                    pairs += 1
                    truth = oracle.brute_conjugacy(T, i, j) is not None
                    if wreath.cp_wreath(x, y, A, B) != truth:
                        mismatches += 1
                    if truth:
                        conjugate += 1
                        z = wreath.csp_wreath(x, y, A, B)
                        zi = None if z is None else oracle.from_element(T, z)
                        # check against the table, independently of the wreath code
                        if zi is None or T.mul[T.mul[zi][i]][T.inv[zi]] != j:
                            bad_witness += 1
        ok = mismatches == 0 and bad_witness == 0
        return ok, (f"{pairs} pairs, {conjugate} conjugate, {mismatches} verdict mismatches, "
                    f"{bad_witness} bad conjugators"), {"pairs": pairs}
    return _timed("finite wreath exhaustive equivalence", run)


# ---------------------------------------------------------------- 2

def magnus_homomorphism(n_pairs=1000, max_len=12, seed=2) -> CheckResult:
    def run():
        rng = random.Random(seed)
        failures = 0
        for d in (2, 3):
            ctx = solvable.SolvableContext(d, 2)
            B, r = ctx.B, 2
            for _ in range(n_pairs):
                u = _random_length_word(rng, r, max_len)
                v = _random_length_word(rng, r, max_len)
                mu, mv = magnus.magnus_image(u, B, r), magnus.magnus_image(v, B, r)
                muv = magnus.magnus_image(u * v, B, r)
                if magnus.magnus_mul(mu, mv) != muv:
                    failures += 1
                if not all(magnus.image_membership(m) for m in (mu, mv, muv)):
                    failures += 1
                wu, wv = magnus.magnus_to_wreath(mu), magnus.magnus_to_wreath(mv)
                if magnus.wreath_to_magnus(wu, B, r) != mu:
                    failures += 1
                if not wreath.w_equal(wreath.w_mul(wu, wv, ctx.A, B),
                                      magnus.magnus_to_wreath(muv), ctx.A, B):
                    failures += 1
        return failures == 0, f"{2 * n_pairs} pairs over S(2,2), S(3,2); {failures} failures", {}
    return _timed("Magnus homomorphism and identity", run)


# ---------------------------------------------------------------- 3

def nested_commutator(depth: int, r: int, rng) -> Word:
    if depth == 0:
        while True:
            w = _random_length_word(rng, r, 2, min_len=1)
            if w.letters:
                return w
    while True:
        c = commutator(nested_commutator(depth - 1, r, rng), nested_commutator(depth - 1, r, rng))
        if c.letters:
            return c


def word_problem(n_commutators=50, n_random=200, seed=3) -> CheckResult:
    def run():
        rng = random.Random(seed)
        problems = []
        c = commutator(Word((1,)), Word((2,)))
        if not magnus.wp_solvable(1, 2, c) or magnus.wp_solvable(2, 2, c):
            problems.append("[x1,x2] triviality")
        m = magnus.magnus_image(c, FreeAbelian(2), 2)
        X1, X2 = Word((1,)), Word((2,))
        expected = (GroupRingElement(FreeAbelian(2), [(1, IDENTITY), (-1, X2)]),
                    GroupRingElement(FreeAbelian(2), [(1, X1), (-1, IDENTITY)]))
        if m.u != expected:
            problems.append(f"u([x1,x2]) = {m}")
        trivial_ok = 0
        for d in (1, 2, 3):
            for r in (2, 3):
                for _ in range(n_commutators):
                    if magnus.wp_solvable(d, r, nested_commutator(d, r, rng)):
                        trivial_ok += 1
                    else:
                        problems.append(f"depth-{d} commutator nontrivial in S({d},{r})")
        nontrivial_ok = 0
        while nontrivial_ok < n_random and len(problems) < 10:
            d, r = rng.randint(1, 3), rng.randint(1, 3)
            w = _random_length_word(rng, r, 12, min_len=1)
            if not any(abelianization(w, r)):
                continue
            if magnus.wp_solvable(d, r, w):
                problems.append(f"{w} trivial in S({d},{r})")
            else:
                nontrivial_ok += 1
        detail = (f"{trivial_ok} nested commutators trivial, {nontrivial_ok} abelian-nonzero words "
                  f"nontrivial; problems: {problems[:3] or 'none'}")
        return not problems, detail, {}
    return _timed("word problem", run)


# ---------------------------------------------------------------- 4

def _commutator_subgroup_word(rng, r, max_len):
    while True:
        w = random_word(r, rng.choice([n for n in range(2, max_len + 1, 2)]), rng)
        if not any(abelianization(w, r)):
            return w


def power_problem(n_cases=200, n_commutator=50, seed=4) -> CheckResult:
    def run():
        rng = random.Random(seed)
        wrong = commutator_cases = 0
        total = 0
        per_group = n_cases // 2
        per_group_comm = -(-n_commutator // 2)
        for d in (2, 3):
            k = 0
            while k < per_group:
                if k < per_group_comm:
                    y = _commutator_subgroup_word(rng, 2, 6)
                else:
                    y = _random_length_word(rng, 2, 6, min_len=1)
                if magnus.wp_solvable(d, 2, y):
                    continue
                k += 1
                n = rng.randint(-5, 5)
                total += 1
                if not any(abelianization(y, 2)):
                    commutator_cases += 1
                if magnus.pp_solvable(d, 2, y ** n, y) != n:
                    wrong += 1
        ok = wrong == 0 and commutator_cases >= n_commutator
        return ok, f"{total} cases ({commutator_cases} in the commutator subgroup), {wrong} wrong", {}
    return _timed("power problem round trip", run)


# ---------------------------------------------------------------- 5

def solvable_conjugacy(n_positive=200, n_negative=200, seed=5) -> CheckResult:
    def run():
        rng = random.Random(seed)
        failures = []
        count = 0
        with cross_checking():
            for d in (2, 3):
                for _ in range(n_positive):
                    x = _random_length_word(rng, 2, 8, min_len=1)
                    s = _random_length_word(rng, 2, 4, min_len=1)
                    y = conj_by(s, x)
                    count += 1
                    if not solvable.cp_solvable(d, 2, x, y):
                        failures.append(f"S({d},2): {x} ~ {y} rejected")
                        continue
                    z = solvable.csp_solvable(d, 2, x, y)
                    if z is None or not magnus.wp_solvable(d, 2, conj_by(z, x) * ~y):
                        failures.append(f"S({d},2): bad conjugator for {x} ~ {y}")
                for _ in range(n_negative):
                    while True:
                        x = _random_length_word(rng, 2, 8, min_len=1)
                        y = _random_length_word(rng, 2, 8, min_len=1)
                        if abelianization(x, 2) != abelianization(y, 2):
                            break
                    count += 1
                    if solvable.cp_solvable(d, 2, x, y):
                        failures.append(f"S({d},2): {x} ~ {y} accepted")
        return not failures, f"{count} pairs, failures: {failures[:3] or 'none'}", {}
    return _timed("free solvable conjugacy", run)


# ---------------------------------------------------------------- 6

def small_instance_crosscheck(max_len=4, search_len=6) -> CheckResult:
    def run():
        G = FreeSolvable(2, 2)
        elements = {}
        for w in words_up_to(2, max_len):
            elements.setdefault(key(G, w), w)
        reps = list(elements.values())
        violations = found = said_no = 0
        for x in reps:
            orbit = oracle.conjugate_orbit(G, x, search_len)
            for y in reps:
                hit = key(G, y) in orbit
                verdict = solvable.cp_solvable(2, 2, x, y)
                found += hit
                said_no += not verdict
                if hit and not verdict:
                    violations += 1
        n = len(reps)
        detail = (f"{n} elements, {n * n} pairs, {found} searches succeeded, "
                  f"{said_no} cp=false, {violations} violations")
        return violations == 0, detail, {"elements": n}
    return _timed("small-instance oracle cross-check", run)


# ---------------------------------------------------------------- 7

def _cyclically_reduced(rng, r, n):
    while True:
        w = random_word(r, n, rng)
        if n < 2 or w.letters[0] != -w.letters[-1]:
            return w


def scaling_guard(lengths=(16, 32, 64), samples=7, seed=7, max_exponent=9.0) -> CheckResult:
    def run():
        rng = random.Random(seed)
        medians = []
        for L in lengths:
            times = []
            for _ in range(samples):
                x = _cyclically_reduced(rng, 2, L // 2)
                k = rng.randrange(len(x))
                y = Word._reduced(x.letters[k:] + x.letters[:k])
                t0 = time.perf_counter()
                verdict = solvable.cp_solvable(2, 2, x, y)
                times.append(time.perf_counter() - t0)
                if not verdict:
                    return False, f"positive pair rejected at L={L}", {}
            medians.append(statistics.median(times))
        slope = statistics.linear_regression([math.log(L) for L in lengths],
                                             [math.log(t) for t in medians]).slope
        detail = ", ".join(f"L={L}: {t * 1e3:.2f}ms" for L, t in zip(lengths, medians))
        return slope <= max_exponent, f"{detail}; fitted exponent {slope:.2f}", {"slope": slope}
    return _timed("scaling guard", run)


def selftest() -> List[CheckResult]:
    """A quick subset of the acceptance runs."""
    return [
        finite_wreath_equivalence(cases=((2, 3), (3, 2))),
        magnus_homomorphism(n_pairs=50),
        word_problem(n_commutators=5, n_random=50),
        power_problem(n_cases=40, n_commutator=10),
        solvable_conjugacy(n_positive=10, n_negative=10),
        scaling_guard(lengths=(8, 16, 32), samples=3),
    ]
