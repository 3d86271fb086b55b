import json
from fractions import Fraction

import pytest

from toughham.errors import BudgetExhausted
from toughham.graph import complete, complete_bipartite, cycle, petersen
from toughham.graph6 import write_graph6
from toughham.harness import (
    atlas_corpus,
    complete_corpus,
    cross_checks,
    dumps,
    hunt_conjecture,
    profile,
    random_corpus,
    strip_timings,
    verify_bauer,
    verify_corollary,
    verify_theorem,
)
from toughham.hamilton import is_hamiltonian
from toughham.structure import independence_number, min_degree, toughness, vertex_connectivity


def g6(g):
    return write_graph6(g).decode()


def corpus(*gs):
    return [(g6(g), g6(g)) for g in gs]


def test_atlas_fixture_counts():
    lines = atlas_corpus()
    assert len(lines) == 1252
    assert sum(1 for _, s in lines if s[0] == "F") == 1044


def test_profile_examples():
    p = profile(petersen(), [4])
    assert (p.delta, p.kappa, p.alpha, p.tau, p.hamiltonian) == (3, 3, 4, Fraction(4, 3), False)
    p = profile(complete(5), [4])
    assert (p.delta, p.kappa, p.alpha, p.tau, p.hamiltonian) == (4, 4, 1, None, True)
    p = profile(complete_bipartite(4, 5), [1, 4])
    assert (p.kappa, p.tau, p.hamiltonian, p.freeness) == (4, Fraction(4, 5), False, {1: True, 4: True})
    rec = p.to_json()
    assert rec["tau"] == "4/5" and set(rec["timings"]) >= {"tau", "kappa", "free4"}
    assert "tau=4/5" in p.to_text()


def test_profile_consistency_on_atlas_sample():
    from toughham.graph6 import parse_graph6

    for _, line in atlas_corpus()[::37]:
        g = parse_graph6(line)
        if g.n < 1:
            continue
        p = profile(g, [1, 2])
        assert p.delta == min_degree(g) and p.kappa == vertex_connectivity(g)
        assert p.alpha == independence_number(g)[0] and p.tau == toughness(g).value
        assert (p.tau is None) == (p.m == p.n * (p.n - 1) // 2)
        assert p.hamiltonian == is_hamiltonian(g)


def test_theorem_on_complete_graphs():
    r = verify_theorem(complete_corpus(9, 20), 4)
    assert (r.scanned, r.satisfying, r.holds, r.violation_count) == (12, 12, 12, 0)


def test_theorem_filters_k89_by_toughness():
    records = []
    r = verify_theorem(corpus(complete_bipartite(8, 9)), 4, sink=records.append)
    assert r.satisfying == 0 and r.filtered == {"tau": 1}
    assert records[0]["filter"] == "tau"


def test_theorem_on_atlas_has_no_satisfying_graphs():
    r = verify_theorem(atlas_corpus(), 4)
    assert r.satisfying == 0 and r.violation_count == 0


def test_corollary_examples():
    assert verify_corollary(complete_corpus(3, 12), 4).violation_count == 0
    r = verify_corollary(corpus(complete_bipartite(4, 5)), 4)
    assert r.filtered == {"tau": 1}
    r = verify_corollary(atlas_corpus(), 4)
    assert r.violation_count == 0 and r.satisfying > 0


def test_bauer_examples():
    r = verify_bauer(atlas_corpus(), 1)
    assert r.violation_count == 0 and r.satisfying > 0
    assert verify_bauer(corpus(cycle(6)), 1).filtered == {"delta": 1}
    r = verify_bauer(corpus(complete(4)), 2)
    assert (r.satisfying, r.holds) == (1, 1)
    with pytest.raises(ValueError):
        verify_bauer(corpus(complete(4)), 0)


def test_cross_checks_on_atlas():
    r = cross_checks(atlas_corpus())
    assert r.violation_count == 0 and r.satisfying == 1249
    # the literal 2*ceil(tau) reading fails on some graphs and is only logged
    assert r.notes["literal_ceiling_reading_fails"] > 0


def test_cross_checks_petersen_logs_literal_reading():
    r = cross_checks(corpus(petersen()))
    assert r.violation_count == 0 and r.notes == {"literal_ceiling_reading_fails": 1}


def test_hunt_budget_zero():
    with pytest.raises(BudgetExhausted) as err:
        hunt_conjecture((9, 14), 4, 0)
    assert err.value.report.scanned == 0 and err.value.report.status == "budget-exhausted"


def test_hunt_near_miss_for_k89():
    r = hunt_conjecture((17, 17), 4, 10, corpus=corpus(complete_bipartite(8, 9)))
    assert r.satisfying == 0
    assert [m["failed"] for m in r.near_misses] == ["tau"]


def run_hunt(jobs):
    out = []
    r = hunt_conjecture((9, 14), 4, 150, seed=7, jobs=jobs, sink=lambda rec: out.append(dumps(strip_timings(rec))))
    out.append(dumps(strip_timings(r.summary())))
    return out, r


def test_hunt_deterministic_across_jobs():
    a, ra = run_hunt(1)
    b, rb = run_hunt(2)
    assert a == b
    assert ra.violation_count == 0 and ra.status == "budget-exhausted"
    assert json.loads(a[-1])["counts"]["scanned"] == 150


def test_random_corpus_is_seeded():
    assert random_corpus(5, (5, 9), (0.2, 0.8), 3) == random_corpus(5, (5, 9), (0.2, 0.8), 3)


def test_report_invariant():
    r = verify_bauer(random_corpus(60, (4, 9), (0.3, 0.9), 1), 1)
    assert r.violation_count == r.satisfying - r.holds == len(r.violations)
    assert r.scanned == 60
