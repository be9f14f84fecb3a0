"""Full-size end-to-end runs; each adds one PASS/FAIL line to the terminal summary."""
from solvcore import checks

from conftest import ACCEPTANCE_LINES


def report(result, time_limit=None):
    ACCEPTANCE_LINES.append(result.line())
    print()
    print(result.line())
    assert result.passed, result.detail
    if time_limit is not None:
        assert result.seconds < time_limit, f"took {result.seconds:.1f}s, limit {time_limit}s"


def test_finite_wreath_equivalence():
    r = checks.finite_wreath_equivalence(cases=((2, 3), (2, 4), (3, 2)))
    assert r.data["pairs"] == 24 ** 2 + 64 ** 2 + 18 ** 2
    report(r, time_limit=300)


def test_magnus_homomorphism():
    report(checks.magnus_homomorphism(n_pairs=1000, max_len=12), time_limit=120)


def test_word_problem():
    report(checks.word_problem(n_commutators=50, n_random=200))


def test_power_problem():
    report(checks.power_problem(n_cases=200, n_commutator=50))


def test_solvable_conjugacy():
    report(checks.solvable_conjugacy(n_positive=200, n_negative=200), time_limit=600)


def test_small_instance_crosscheck():
    report(checks.small_instance_crosscheck(max_len=4, search_len=6))


def test_scaling_guard():
    report(checks.scaling_guard(lengths=(16, 32, 64), max_exponent=9.0))
