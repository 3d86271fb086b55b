"""Exit criteria at full scale; each test prints one PASS/FAIL line."""

import json
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from oracles import (
    brute_alpha,
    brute_connectivity,
    brute_toughness,
    encode_graph6,
    frontier_hamiltonian,
    graph_data,
    is_cycle_of,
)
from test_replay import BASE, CASES, apex_instance, chords
from toughham.cli import main
from toughham.graph import complete_bipartite, forbidden_pattern, petersen, random_gnp
from toughham.graph6 import parse_graph6, write_graph6
from toughham.hamilton import hamiltonian_cycle, longest_cycle, validate_cycle
from toughham.harness import atlas_corpus, cross_checks, strip_timings, theorem_corpus, verify_bauer, verify_theorem
from toughham.replay import LongerCycle, replay, validate_certificate
from toughham.structure import find_induced, independence_number, is_p2kp1_free, toughness, vertex_connectivity

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def atlas_graphs():
    return [(line, parse_graph6(line)) for _, line in atlas_corpus()]


def test_criterion_1_toughness_oracle(atlas_graphs, report):
    start = time.perf_counter()
    bad = []
    for line, g in atlas_graphs:
        n, adj = graph_data(g)
        want, _ = brute_toughness(n, adj)
        if toughness(g).value != want:
            bad.append(line)
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 60,
           f"{len(atlas_graphs)} graphs, {len(bad)} mismatches, {elapsed:.1f}s")


def test_criterion_2_named_graphs(report):
    failures = []
    g = petersen()
    n, adj = graph_data(g)
    oracle = (brute_connectivity(n, adj), brute_alpha(n, adj)[0], brute_toughness(n, adj)[0], frontier_hamiltonian(n, adj))
    frozen = (3, 4, Fraction(4, 3), False)
    got = (vertex_connectivity(g), independence_number(g)[0], toughness(g).value, hamiltonian_cycle(g) is not None)
    if not oracle == frozen == got:
        failures.append(("petersen", oracle, got))
    checked = 1
    for b in range(2, 9):
        for a in range(1, b):
            g = complete_bipartite(a, b)
            n, adj = graph_data(g)
            frozen = (a, Fraction(a, b), False)
            oracle = (brute_connectivity(n, adj), brute_toughness(n, adj)[0], frontier_hamiltonian(n, adj))
            got = (vertex_connectivity(g), toughness(g).value, hamiltonian_cycle(g) is not None)
            if not oracle == frozen == got:
                failures.append((f"K{a},{b}", oracle, got))
            checked += 1
    report(2, not failures, f"{checked} named graphs, failures={failures}")


def test_criterion_3_freeness(atlas_graphs, report):
    start = time.perf_counter()
    patterns = {k: forbidden_pattern(k) for k in (1, 2, 3)}
    bad = [
        (line, k)
        for line, g in atlas_graphs
        for k, h in patterns.items()
        if is_p2kp1_free(g, k) != (find_induced(g, h) is None)
    ]
    elapsed = time.perf_counter() - start
    report(3, not bad and elapsed < 120,
           f"{3 * len(atlas_graphs)} (graph, k) pairs, {len(bad)} disagreements, {elapsed:.1f}s")


def test_criterion_4_hamilton_engines(atlas_graphs, report):
    graphs = [g for _, g in atlas_graphs if g.n >= 3]
    rng = random.Random(4)
    for _ in range(500):
        graphs.append(random_gnp(rng.randint(10, 16), rng.choice(["1/4", "2/5", "1/2", "3/5", "3/4"]), rng.getrandbits(32)))
    disagree = invalid = ham = 0
    for g in graphs:
        found = {}
        for method in ("backtrack", "dp"):
            cyc = hamiltonian_cycle(g, method=method)
            found[method] = cyc is not None
            if cyc is not None:
                n, adj = graph_data(g)
                validate_cycle(g, cyc)
                if len(cyc) != g.n or not is_cycle_of(adj, list(cyc)):
                    invalid += 1
        disagree += found["backtrack"] != found["dp"]
        ham += found["dp"]
    report(4, disagree == 0 and invalid == 0,
           f"{len(graphs)} graphs ({ham} hamiltonian), {disagree} disagreements, {invalid} invalid cycles")


def test_criterion_5_classical_facts(report):
    corpus = atlas_corpus()
    cross = cross_checks(corpus)
    bauer = {t: verify_bauer(corpus, t) for t in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3))}
    violations = cross.violation_count + sum(r.violation_count for r in bauer.values())
    detail = ", ".join(f"bauer t={t}: {r.satisfying} satisfying" for t, r in bauer.items())
    report(5, violations == 0,
           f"{cross.scanned} graphs, cross checks {cross.satisfying} satisfying, {detail}, {violations} violations")


def test_criterion_6_theorem_campaign(report):
    corpus = theorem_corpus()
    start = time.perf_counter()
    r = verify_theorem(corpus, 4, jobs=4)
    elapsed = time.perf_counter() - start
    ok = r.scanned >= 10 ** 4 and r.violation_count == 0 and elapsed < 600
    report(6, ok, f"{r.scanned} graphs, {r.satisfying} pass the filter, {r.violation_count} violations, {elapsed:.1f}s")


def test_criterion_7_replay_soundness(report):
    rng = random.Random(7)
    outcomes = Counter()
    longer = 0
    seen = 0
    while seen < 1000:
        g = random_gnp(rng.randint(8, 16), rng.choice(["3/10", "1/2", "7/10"]), rng.getrandbits(32))
        c = longest_cycle(g)
        if c is None or len(c) == g.n:
            continue
        seen += 1
        out = replay(g, 4, c)
        validate_certificate(g, 4, c, out)
        longer += isinstance(out, LongerCycle)
        outcomes[out.outcome] += 1
    fixtures_ok = 0
    for tag, (attachments, extra) in CASES.items():
        g, c = apex_instance(20, attachments, chords(extra))
        out = replay(g, 4, c)
        n, adj = graph_data(g)
        if isinstance(out, LongerCycle) and out.tag == tag and len(out.cycle) > len(c) and is_cycle_of(adj, list(out.cycle)):
            validate_certificate(g, 4, c, out)
            fixtures_ok += 1
    ok = longer == 0 and fixtures_ok == len(CASES)
    report(7, ok, f"{seen} random graphs {dict(outcomes)}, {longer} LongerCycle, "
                  f"{fixtures_ok}/{len(CASES)} case fixtures")


def test_criterion_8_hunt_determinism(tmp_path, report):
    args = ["hunt", "--k", "4", "--n", "9..14", "--budget", "1000", "--seed", "7"]
    runs = []
    for name in ("a", "b"):
        path = tmp_path / f"{name}.jsonl"
        assert main(args + ["--output", str(path)]) == 0
        runs.append([json.dumps(strip_timings(json.loads(line)), sort_keys=True) for line in path.read_text().splitlines()])
    summary = json.loads(runs[0][-1])
    ok = runs[0] == runs[1] and summary["counts"]["violations"] == 0
    report(8, ok, f"{len(runs[0])} records identical={runs[0] == runs[1]}, "
                  f"{summary['counts']['hypothesis_satisfying']} satisfying, {summary['counts']['violations']} violations")


def test_criterion_9_graph6_roundtrip(report):
    bad = 0
    lines = atlas_corpus()
    for _, line in lines:
        g = parse_graph6(line)
        bad += write_graph6(g).decode() != line
        n, adj = graph_data(g)
        bad += encode_graph6(n, g.edges()) != line
    rng = random.Random(9)
    for _ in range(10 ** 4):
        n = rng.randint(0, 64)
        g = random_gnp(n, Fraction(rng.randint(0, 20), 20), rng.getrandbits(32))
        data = write_graph6(g)
        back = parse_graph6(data)
        bad += back.n != g.n or back.edges() != g.edges() or write_graph6(back) != data
        if n < 63:
            bad += encode_graph6(n, g.edges()) != data.decode()
    report(9, bad == 0, f"{len(lines)} fixture lines + 10000 random graphs, {bad} mismatches")
