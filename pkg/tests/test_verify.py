from __future__ import annotations

import random

from milnorlink import verify


def test_all_suites_pass_for_a_seed():
    results = verify.run_all(3, 120)
    assert [r.name for r in results]
    assert all(r.passed for r in results), [r.failures for r in results if not r.passed]


def test_zero_cases_is_vacuous():
    assert all(r.checked == 0 and r.passed for r in verify.run_all(42, 0))


def test_random_patterns_are_valid():
    from milnorlink import surfaces
    rng = random.Random(0)
    for _ in range(200):
        assert surfaces.validate(verify.random_pattern(rng)) == []


def test_seeding_is_deterministic():
    a = verify.random_word(random.Random("x"))
    b = verify.random_word(random.Random("x"))
    assert a == b
