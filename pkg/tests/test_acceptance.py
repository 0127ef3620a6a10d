"""Acceptance criteria 1-8, each with its runtime budget.

Every test prints one ``CRITERION k: PASS|FAIL`` line even when pytest
captures output, so ``pytest -v`` doubles as the acceptance report.
"""

import math
import time

import pytest

from thetachain.properties import SuiteConfig, compare_conventions, run_criterion

BUDGET = {1: 1.0, 2: 10.0, 3: 30.0, 4: 30.0, 5: 10.0, 6: 60.0, 7: 10.0}
BUDGET[8] = 2 * sum(BUDGET[k] for k in range(2, 8))


def report(capsys, criterion, ok, seconds, detail=""):
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\nCRITERION {criterion}: {status} in {seconds:.2f}s (budget {BUDGET[criterion]:.0f}s){detail}")


def run(criterion, capsys, cfg=None):
    start = time.perf_counter()
    results = run_criterion(criterion, cfg or SuiteConfig())
    elapsed = time.perf_counter() - start
    failures = [f"{r.name}: {m}" for r in results for m in r.failures]
    ok = not failures and elapsed < BUDGET[criterion]
    report(capsys, criterion, ok, elapsed, f"; first failure: {failures[0]}" if failures else "")
    assert not failures, failures[:5]
    assert elapsed < BUDGET[criterion]
    return {r.name: r.counts for r in results}


def test_criterion_1_representation_bijections(capsys):
    counts = run(1, capsys)
    # every sequence of length ≤ 13 (C_0 + ... + C_6 of them) round-trips
    assert counts["representations.round_trips"]["sequences"] == 197


def test_criterion_2_theta1_is_delta(capsys):
    counts = run(2, capsys)["simple.theta1_hom_counts"]
    for m in range(5):
        for n in range(5):
            assert counts[f"Hom(O_{m},O_{n})"] == math.comb(m + n + 1, m + 1)
    assert counts["Hom(O_1,O_1)"] == 3 and counts["Hom(O_1,O_2)"] == 6


def test_criterion_3_morphism_criterion(capsys):
    counts = run(3, capsys)
    assert counts["simple.separated_images"]["morphisms"] > 0


def test_criterion_4_cells(capsys):
    counts = run(4, capsys)["cells.counts_and_laws"]
    assert [counts[f"cells{d}"] for d in [(0,), (0, 1, 0), (0, 1, 0, 1, 0), (0, 1, 2, 1, 0)]] == [1, 3, 6, 5]


def test_criterion_5_duality(capsys):
    run(5, capsys)


def test_criterion_6_wreath_and_v(capsys):
    counts = run(6, capsys)
    ex = counts["wreath.example_and_propagation"]
    assert ex["Hom((1,pt),(1,pt))"] == 3 and ex["Hom((1,pt),(2,pt pt))"] == 6
    assert counts["wreath.fully_faithful"]["objects"] == 23


def test_criterion_7_filtration(capsys):
    counts = run(7, capsys)["wreath.filtration"]
    assert [counts[f"Theta_{n}"] for n in range(4)] == [1, 7, 64, 145]


@pytest.mark.slow
def test_criterion_8_convention_robustness(capsys):
    res = compare_conventions(SuiteConfig())
    ok = res.ok and res.seconds < BUDGET[8]
    report(capsys, 8, ok, res.seconds, f"; {res.failures[0]}" if res.failures else "")
    assert res.ok, res.failures[:5]
    assert res.seconds < BUDGET[8]
