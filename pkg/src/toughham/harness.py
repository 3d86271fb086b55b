"""Verification campaigns over graph corpora, with JSONL reporting.

A corpus is an iterable of ``(graph_id, graph6)`` pairs.  Each graph runs
through a pure per-graph pipeline (possibly in a worker pool); results are
merged in input order so reports are deterministic apart from timing fields.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from . import _pykernels
from .errors import BudgetExhausted, CapExceeded, ValidationFailure
from .graph import Graph, add_edges, complete, complete_bipartite, forbidden_pattern, random_gnp
from .graph6 import parse_graph6, write_graph6
from .hamilton import is_hamiltonian
from .replay import outcome_json, replay
from .structure import (
    find_induced,
    find_p2kp1,
    format_ratio,
    independence_number,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    min_degree,
    solver_cap,
    toughness,
    vertex_connectivity,
)

SCHEMA = "toughham/1"
TIMING_KEYS = frozenset({"timings", "wall_clock_ms"})

Corpus = Iterable[tuple[str, str]]


# --- corpora -----------------------------------------------------------------


def _g6(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def graph6_corpus(lines: Iterable[str | bytes]) -> Iterator[tuple[str, str]]:
    """Corpus from graph6 lines; the id is the line itself."""
    for raw in lines:
        line = raw.decode("ascii") if isinstance(raw, bytes) else raw
        line = line.strip("\r\n")
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if line:
            yield line, line


def file_corpus(path: str | Path) -> Iterator[tuple[str, str]]:
    with open(path, "rb") as fh:
        yield from graph6_corpus(fh)


def atlas_corpus(max_n: int = 7, min_n: int = 1) -> list[tuple[str, str]]:
    """The vendored enumeration of all graphs on at most 7 vertices."""
    text = resources.files("toughham").joinpath("data/atlas7.g6").read_text()
    out = []
    for gid, line in graph6_corpus(text.splitlines()):
        n = parse_graph6(line).n
        if min_n <= n <= max_n:
            out.append((gid, line))
    return out


def complete_corpus(lo: int, hi: int) -> list[tuple[str, str]]:
    return [(f"K{n}", _g6(complete(n))) for n in range(lo, hi + 1)]


def random_corpus(
    count: int, n_range: tuple[int, int], p_range: tuple[float, float], seed: int, prefix: str = "gnp"
) -> list[tuple[str, str]]:
    """Fixed-seed G(n, p) graphs with n and p drawn uniformly per graph."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(*n_range)
        p = round(rng.uniform(*p_range), 4)
        g = random_gnp(n, p, rng.getrandbits(32))
        out.append((f"{prefix}-{seed}-{i}", _g6(g)))
    return out


def theorem_corpus(seed: int = 2024) -> list[tuple[str, str]]:
    """Sampled n ≤ 9 graphs, complete graphs up to 20 and dense random graphs up to 20."""
    corpus = random_corpus(8000, (3, 9), (0.05, 1.0), seed, "small")
    corpus += complete_corpus(3, 20)
    corpus += random_corpus(2000, (10, 20), (0.8, 1.0), seed + 1, "dense")
    return corpus


# --- profiles ----------------------------------------------------------------


@dataclass
class PropertyProfile:
    graph_id: str
    n: int
    m: int
    delta: int
    kappa: int
    alpha: int
    tau: Optional[Fraction]
    hamiltonian: bool
    freeness: dict[int, bool]
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "kappa": self.kappa,
            "alpha": self.alpha,
            "tau": format_ratio(self.tau),
            "hamiltonian": self.hamiltonian,
            "free": {str(k): v for k, v in sorted(self.freeness.items())},
            "timings": self.timings,
        }

    def to_text(self) -> str:
        free = " ".join(f"free{k}={'yes' if v else 'no'}" for k, v in sorted(self.freeness.items()))
        return (
            f"{self.graph_id}: n={self.n} m={self.m} delta={self.delta} kappa={self.kappa} "
            f"alpha={self.alpha} tau={format_ratio(self.tau)} hamiltonian={'yes' if self.hamiltonian else 'no'}"
            + (f" {free}" if free else "")
        )


def _timed(timings: dict, key: str, fn: Callable, *args):
    start = time.perf_counter()
    value = fn(*args)
    timings[key] = round((time.perf_counter() - start) * 1000, 3)
    return value


def profile(g: Graph, ks: Iterable[int] = (), graph_id: Optional[str] = None) -> PropertyProfile:
    """Every invariant the campaigns consume, computed exactly."""
    timings: dict[str, float] = {}
    tau = _timed(timings, "tau", toughness, g).value
    return PropertyProfile(
        graph_id=graph_id if graph_id is not None else _g6(g),
        n=g.n,
        m=g.m,
        delta=_timed(timings, "delta", min_degree, g),
        kappa=_timed(timings, "kappa", vertex_connectivity, g),
        alpha=_timed(timings, "alpha", independence_number, g)[0],
        tau=tau,
        hamiltonian=_timed(timings, "hamiltonian", is_hamiltonian, g),
        freeness={k: _timed(timings, f"free{k}", is_p2kp1_free, g, k) for k in sorted(set(ks))},
        timings=timings,
    )


# --- reports -----------------------------------------------------------------


@dataclass
class CampaignReport:
    campaign: str
    corpus: dict
    scanned: int = 0
    satisfying: int = 0
    holds: int = 0
    violations: list[dict] = field(default_factory=list)
    filtered: dict[str, int] = field(default_factory=dict)
    notes: dict[str, int] = field(default_factory=dict)
    near_misses: list[dict] = field(default_factory=list)
    status: str = "complete"
    wall_clock_ms: float = 0.0

    @property
    def violation_count(self) -> int:
        return self.satisfying - self.holds

    def summary(self) -> dict:
        return {
            "schema": SCHEMA,
            "type": "summary",
            "campaign": self.campaign,
            "corpus": self.corpus,
            "status": self.status,
            "counts": {
                "scanned": self.scanned,
                "hypothesis_satisfying": self.satisfying,
                "conclusion_holds": self.holds,
                "violations": self.violation_count,
            },
            "filtered": dict(sorted(self.filtered.items())),
            "notes": dict(sorted(self.notes.items())),
            "near_misses": len(self.near_misses),
            "wall_clock_ms": self.wall_clock_ms,
        }


def strip_timings(obj):
    """Drop timing fields so two reports can be compared byte for byte."""
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


# --- per-graph pipelines (run inside workers) --------------------------------------


def _theorem_filters(k: int):
    two_k = 2 * k
    return [
        ("n>=3", lambda g: g.n >= 3),
        ("delta", lambda g: min_degree(g) >= two_k),
        ("kappa", lambda g: is_k_connected(g, two_k)),
        ("free", lambda g: is_p2kp1_free(g, k)),
        ("tau", lambda g: bool(is_t_tough(g, 4))),
    ]


def _corollary_filters(k: int):
    return [
        ("n>=3", lambda g: g.n >= 3),
        ("free", lambda g: is_p2kp1_free(g, k)),
        ("tau", lambda g: bool(is_t_tough(g, k))),
    ]


def _bauer_filters(t: Fraction):
    return [
        ("n>=3", lambda g: g.n >= 3),
        ("delta", lambda g: (min_degree(g) + 1) * (t + 1) > g.n),
        ("tau", lambda g: bool(is_t_tough(g, t))),
    ]


def _conjecture_filters(k: int):
    two_k = 2 * k
    return [
        ("n>=3", lambda g: g.n >= 3),
        ("delta", lambda g: min_degree(g) >= two_k),
        ("kappa", lambda g: is_k_connected(g, two_k)),
        ("free", lambda g: is_p2kp1_free(g, k)),
        ("tau", lambda g: bool(is_t_tough(g, 1))),
    ]


def _filters_for(campaign: str, param):
    if campaign == "theorem":
        return _theorem_filters(param)
    if campaign == "corollary":
        return _corollary_filters(param)
    if campaign == "bauer":
        return _bauer_filters(param)
    if campaign == "hunt":
        return _conjecture_filters(param)
    raise ValueError(campaign)


def _run_filters(g: Graph, filters) -> Optional[str]:
    """Name of the first failing hypothesis, cheapest first; None if all pass."""
    for name, test in filters:
        if not test(g):
            return name
    return None


def _evaluate(task) -> dict:
    campaign, param, gid, line = task
    start = time.perf_counter()
    g = parse_graph6(line)
    record: dict = {"schema": SCHEMA, "type": "graph", "campaign": campaign, "id": gid, "g6": line, "n": g.n}
    try:
        if campaign == "cross":
            record.update(_cross_record(g))
        else:
            failed = _run_filters(g, _filters_for(campaign, param))
            record["filter"] = failed or "pass"
            if failed is None:
                record["hamiltonian"] = is_hamiltonian(g)
                if campaign == "corollary" and g.n >= 2:
                    # the logged companion fact: t-tough non-complete graphs are 2⌈t⌉-connected
                    record["kappa_ge_2ceil_k"] = g.is_complete() or is_k_connected(g, 2 * math.ceil(param))
            elif campaign == "hunt":
                record.update(_near_miss_data(g, param, failed))
    except CapExceeded as exc:
        record["filter"] = "cap-exceeded"
        record["error"] = str(exc)
    record["timings"] = {"total": round((time.perf_counter() - start) * 1000, 3)}
    return record


def _near_miss_data(g: Graph, k: int, failed: str) -> dict:
    """For a non-hamiltonian graph, which hypotheses of the conjecture fail."""
    if g.n < 3 or is_hamiltonian(g):
        return {}
    fails = [name for name, test in _conjecture_filters(k) if name != "delta" and not test(g)]
    return {"hamiltonian": False, "failed_all": fails}


def _cross_record(g: Graph) -> dict:
    out: dict = {}
    if g.n < 3:
        out["skipped"] = "n<3"
        return out
    ham = is_hamiltonian(g)
    tau = toughness(g)
    kappa = vertex_connectivity(g)
    alpha = independence_number(g)[0]
    complete_graph = g.is_complete()
    out["hamiltonian"] = ham
    out["tau"] = format_ratio(tau.value)
    checks = {"ham_implies_1tough": (not ham) or tau.at_least(1)}
    if complete_graph:
        checks["kappa_ge_2tau"] = True
        literal = True
    else:
        checks["kappa_ge_2tau"] = kappa >= math.ceil(2 * tau.value)
        literal = kappa >= 2 * math.ceil(tau.value)
    checks["chvatal_erdos"] = not (kappa >= alpha) or ham
    free_ok = True
    for k in (1, 2, 3):
        generic = find_induced(g, forbidden_pattern(k)) is None
        free_ok &= generic == is_p2kp1_free(g, k)
    checks["freeness_oracle"] = free_ok
    out["checks"] = checks
    out["literal_ceiling"] = literal
    return out


# --- independent re-verification ---------------------------------------------------


def _reverify_nonhamiltonian(g: Graph) -> bool:
    """Two engines must both fail to find a hamiltonian cycle."""
    if g.n < 3:
        return True
    if _pykernels.ham_backtrack(g.adj, g.n) is not None:
        return False
    if g.n <= solver_cap("ham_dp") and _pykernels.ham_dp(g.adj, g.n):
        return False
    return True


def _reverify_tough(g: Graph, t: Fraction) -> bool:
    if g.is_complete():
        return True
    alpha = _pykernels.max_independent_set(g.adj, g.full_mask).bit_count()
    found = _pykernels.toughness_search(g.adj, g.n, alpha, 0, 0, False)
    return Fraction(found[0], found[1]) >= t


def _reverify_connected(g: Graph, k: int) -> bool:
    return vertex_connectivity(g) >= k


def _reverify_free(g: Graph, k: int) -> bool:
    if g.n <= 12:
        return find_induced(g, forbidden_pattern(k)) is None
    return find_p2kp1(g, k) is None


def reverify_violation(campaign: str, param, g: Graph) -> bool:
    """Independent re-check of a reported violation (hypotheses hold, conclusion fails)."""
    if not _reverify_nonhamiltonian(g):
        return False
    if campaign == "theorem":
        k = param
        return _reverify_tough(g, Fraction(4)) and _reverify_connected(g, 2 * k) and _reverify_free(g, k)
    if campaign == "corollary":
        return _reverify_tough(g, Fraction(param)) and _reverify_free(g, param)
    if campaign == "bauer":
        return _reverify_tough(g, param) and (min_degree(g) + 1) * (param + 1) > g.n
    if campaign == "hunt":
        k = param
        return _reverify_tough(g, Fraction(1)) and _reverify_connected(g, 2 * k) and _reverify_free(g, k)
    raise ValueError(campaign)


# --- campaign driver -------------------------------------------------------------


def _map_ordered(tasks: list, jobs: int) -> Iterator[dict]:
    if jobs <= 1 or len(tasks) < 2:
        for task in tasks:
            yield _evaluate(task)
        return
    ctx = multiprocessing.get_context("fork") if hasattr(multiprocessing, "get_context") else multiprocessing
    chunk = max(1, min(64, len(tasks) // (jobs * 8) or 1))
    with ctx.Pool(jobs) as pool:
        yield from pool.imap(_evaluate, tasks, chunksize=chunk)


def _violation_record(campaign: str, param, record: dict, ks) -> dict:
    g = parse_graph6(record["g6"])
    prof = profile(g, ks, record["id"])
    verified = reverify_violation(campaign, param, g) and reverify_violation(campaign, param, g)
    out = {
        "schema": SCHEMA,
        "type": "violation",
        "campaign": campaign,
        "id": record["id"],
        "g6": record["g6"],
        "profile": prof.to_json(),
        "verified": verified,
    }
    if campaign in ("theorem", "hunt") and isinstance(param, int) and param >= 4:
        try:
            out["replay"] = outcome_json(replay(g, param))
        except (ValidationFailure, CapExceeded) as exc:
            out["replay"] = {"error": type(exc).__name__, "message": str(exc)}
    return out


def run_campaign(
    campaign: str,
    param,
    corpus: Corpus,
    descriptor: dict,
    jobs: int = 1,
    sink: Optional[Callable[[dict], None]] = None,
    ks: Iterable[int] = (),
) -> CampaignReport:
    """Evaluate every corpus graph and fold the records into a report.

    ``sink`` receives each JSONL record (graph, violation, near-miss) in
    input order; the summary object is left to the caller.
    """
    start = time.perf_counter()
    report = CampaignReport(campaign, descriptor)
    tasks = [(campaign, param, gid, line) for gid, line in corpus]
    emit = sink or (lambda rec: None)
    for rec in _map_ordered(tasks, jobs):
        report.scanned += 1
        emit(rec)
        if campaign == "cross":
            _fold_cross(report, rec)
            continue
        failed = rec.get("filter")
        if failed != "pass":
            report.filtered[failed] = report.filtered.get(failed, 0) + 1
            if campaign == "hunt" and len(rec.get("failed_all", ())) == 1:
                miss = {"schema": SCHEMA, "type": "near-miss", "id": rec["id"], "g6": rec["g6"],
                        "failed": rec["failed_all"][0]}
                report.near_misses.append(miss)
                emit(miss)
            continue
        report.satisfying += 1
        if rec["hamiltonian"]:
            report.holds += 1
        else:
            viol = _violation_record(campaign, param, rec, ks)
            report.violations.append(viol)
            emit(viol)
        if campaign == "corollary" and not rec.get("kappa_ge_2ceil_k", True):
            report.notes["corollary_ceiling_literal_fails"] = report.notes.get("corollary_ceiling_literal_fails", 0) + 1
    report.wall_clock_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def _fold_cross(report: CampaignReport, rec: dict) -> None:
    if "checks" not in rec:
        report.filtered[rec.get("skipped", "skipped")] = report.filtered.get(rec.get("skipped", "skipped"), 0) + 1
        return
    report.satisfying += 1
    failed = [name for name, ok in rec["checks"].items() if not ok]
    if not failed:
        report.holds += 1
    else:
        viol = {"schema": SCHEMA, "type": "violation", "campaign": "cross", "id": rec["id"], "g6": rec["g6"],
                "checks": failed, "verified": True}
        report.violations.append(viol)
    if not rec["literal_ceiling"]:
        report.notes["literal_ceiling_reading_fails"] = report.notes.get("literal_ceiling_reading_fails", 0) + 1


def verify_theorem(corpus: Corpus, k: int, jobs: int = 1, sink=None, descriptor: Optional[dict] = None) -> CampaignReport:
    """τ ≥ 4, κ ≥ 2k, (P2 ∪ kP1)-free, n ≥ 3 should force a hamiltonian cycle."""
    if k < 4:
        raise ValueError("k must be at least 4")
    desc = {"source": "corpus", "filters": ["n>=3", "tau>=4", f"kappa>={2 * k}", f"free{k}"], **(descriptor or {})}
    return run_campaign("theorem", k, corpus, desc, jobs, sink, ks=(k,))


def verify_corollary(corpus: Corpus, k: int, jobs: int = 1, sink=None, descriptor: Optional[dict] = None) -> CampaignReport:
    """τ ≥ k, (P2 ∪ kP1)-free, n ≥ 3 should force a hamiltonian cycle."""
    if k < 4:
        raise ValueError("k must be at least 4")
    desc = {"source": "corpus", "filters": ["n>=3", f"tau>={k}", f"free{k}"], **(descriptor or {})}
    return run_campaign("corollary", k, corpus, desc, jobs, sink, ks=(k,))


def verify_bauer(corpus: Corpus, t, jobs: int = 1, sink=None, descriptor: Optional[dict] = None) -> CampaignReport:
    """τ ≥ t and δ > n/(t+1) - 1 should force a hamiltonian cycle."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    desc = {"source": "corpus", "filters": ["n>=3", f"delta>n/({format_ratio(t)}+1)-1", f"tau>={format_ratio(t)}"],
            **(descriptor or {})}
    return run_campaign("bauer", t, corpus, desc, jobs, sink)


def cross_checks(corpus: Corpus, jobs: int = 1, sink=None, descriptor: Optional[dict] = None) -> CampaignReport:
    """Per-graph background facts: hamiltonian ⇒ 1-tough, κ ≥ 2τ, Chvátal–Erdős, freeness oracle agreement."""
    desc = {"source": "corpus", "filters": ["n>=3"], **(descriptor or {})}
    return run_campaign("cross", None, corpus, desc, jobs, sink)


def hunt_sampler(n_range: tuple[int, int], seed: int, budget: int) -> list[tuple[str, str]]:
    """Dense G(n, p) draws mixed with K_{a,b} plus random edges inside the small side."""
    rng = random.Random(seed)
    out = []
    lo, hi = n_range
    for i in range(budget):
        n = rng.randint(lo, hi)
        if rng.random() < 0.75:
            p = round(rng.uniform(0.6, 1.0), 4)
            g = random_gnp(n, p, rng.getrandbits(32))
            gid = f"hunt-{seed}-{i}-gnp"
        else:
            a = rng.randint(max(1, n // 2 - 1), n // 2)
            g = complete_bipartite(a, n - a)
            extra = [(u, v) for v in range(a) for u in range(v) if rng.random() < 0.5]
            g = add_edges(g, extra) if extra else g
            gid = f"hunt-{seed}-{i}-bip"
        out.append((gid, _g6(g)))
    return out


def hunt_conjecture(
    n_range: tuple[int, int],
    k: int,
    budget: int,
    seed: int = 0,
    jobs: int = 1,
    sink=None,
    corpus: Optional[Corpus] = None,
) -> CampaignReport:
    """Search for 1-tough, 2k-connected, (P2 ∪ kP1)-free non-hamiltonian graphs.

    Stops after ``budget`` graphs with status ``budget-exhausted``.  A zero
    budget raises :class:`BudgetExhausted` carrying the empty report.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    desc = {"source": "sampler" if corpus is None else "corpus", "n": list(n_range), "k": k, "seed": seed,
            "budget": budget, "filters": ["n>=3", f"kappa>={2 * k}", f"free{k}", "tau>=1"]}
    if budget <= 0:
        exc = BudgetExhausted("budget exhausted before the first graph")
        exc.report = CampaignReport("hunt", desc, status="budget-exhausted")
        raise exc
    if corpus is None:
        tasks = hunt_sampler(n_range, seed, budget)
    else:
        tasks = list(corpus)[:budget]
    report = run_campaign("hunt", k, tasks, desc, jobs, sink, ks=(k,))
    report.status = "budget-exhausted" if corpus is None or len(tasks) == budget else "complete"
    return report
