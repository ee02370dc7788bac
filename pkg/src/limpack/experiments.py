"""Repeated randomized runs, oracle sandwich sweeps and the sharpness trend."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bounds
from .graph import Graph, cycle_graph, generate, gnp_graph, max_degree, min_degree, rook_graph
from .packing import (
    DEFAULT_ORACLE_CAP,
    PackingInstance,
    exact_Lk,
    exact_ktuple_domination,
    randomized_packing,
    verify_packing,
)

MASK64 = (1 << 64) - 1
SEED_RULE = "splitmix64(master_seed ^ splitmix64(index))"


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def trial_seed(master_seed: int, index: int) -> int:
    """64-bit seed for trial ``index``; depends only on (master_seed, index)."""
    return splitmix64((master_seed & MASK64) ^ splitmix64(index))


@dataclass
class TrialStats:
    trials: int
    sizes: list[int]
    mean: float
    max: int
    min: int
    master_seed: int
    per_trial_seeds: str
    lower_bound: float | None

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "sizes": self.sizes,
            "mean": self.mean,
            "max": self.max,
            "min": self.min,
            "seed": self.master_seed,
            "per_trial_seeds": self.per_trial_seeds,
            "lower_bound": self.lower_bound,
        }


def _one_trial(args) -> int:
    inst, seed = args
    res = randomized_packing(inst, seed)
    if not verify_packing(inst, res.set):
        raise AssertionError(f"trial with seed {seed} produced an invalid packing")
    return res.size


def run_trials(inst: PackingInstance, trials: int, master_seed: int,
               workers: int = 1) -> TrialStats:
    """Run ``trials`` independent randomized packings.

    Results land in slot ``i`` for trial ``i`` whatever the worker count, so
    the statistics only depend on ``(inst, trials, master_seed)``.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    jobs = [(inst, trial_seed(master_seed, i)) for i in range(trials)]
    if workers <= 1:
        sizes = [_one_trial(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            sizes = list(pool.map(_one_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    g = inst.graph
    return TrialStats(
        trials=trials,
        sizes=sizes,
        mean=sum(sizes) / trials,
        max=max(sizes),
        min=min(sizes),
        master_seed=master_seed,
        per_trial_seeds=SEED_RULE,
        lower_bound=bounds.lower_bound_thm1(g.n, max_degree(g), inst.k),
    )


@dataclass
class SweepRow:
    label: str
    n: int
    k: int
    lk: int | None = None
    ktuple: int | None = None
    domination: int | None = None
    violations: list[str] = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label, "n": self.n, "k": self.k, "L_k": self.lk,
            "ktuple": self.ktuple, "gamma": self.domination,
            "violations": self.violations, "note": self.note,
        }


@dataclass
class SweepReport:
    rows: list[SweepRow]

    @property
    def violations(self) -> list[str]:
        return [f"{r.label} k={r.k}: {v}" for r in self.rows for v in r.violations]

    @property
    def checked(self) -> int:
        return sum(1 for r in self.rows if r.lk is not None)

    def to_dict(self) -> dict:
        return {
            "instances": len(self.rows),
            "checked": self.checked,
            "violation_count": len(self.violations),
            "rows": [r.to_dict() for r in self.rows],
        }


_EPS = 1e-9


def check_instance(label: str, g: Graph, k: int, oracle_cap: int = DEFAULT_ORACLE_CAP) -> SweepRow:
    row = SweepRow(label, g.n, k)
    if g.n > oracle_cap:
        row.note = f"skipped: n={g.n} above oracle cap {oracle_cap}"
        return row
    if g.n == 0:
        row.note = "skipped: empty graph"
        return row
    inst = PackingInstance(g, k)
    lk = exact_Lk(inst, oracle_cap).size
    row.lk = lk
    dmin = min_degree(g)
    if dmin >= k - 1:
        row.ktuple = exact_ktuple_domination(inst, oracle_cap).size
        if lk > row.ktuple:
            row.violations.append(f"L_k={lk} > gamma_xk={row.ktuple}")
    else:
        row.note = f"gamma_xk undefined (delta={dmin} < k-1={k - 1})"
    row.domination = exact_ktuple_domination(PackingInstance(g, 1), oracle_cap).size
    rho = lk if k == 1 else exact_Lk(PackingInstance(g, 1), oracle_cap).size
    if rho > row.domination:
        row.violations.append(f"rho={rho} > gamma={row.domination}")

    rep = bounds.bound_report(g, k, row.ktuple)
    for e in rep.entries:
        if not e.applicable:
            continue
        if e.kind == bounds.LOWER and lk < e.value - _EPS:
            row.violations.append(f"{e.name}={e.value:.6g} > L_k={lk}")
        elif e.kind == bounds.UPPER and lk > e.value + _EPS:
            row.violations.append(f"{e.name}={e.value:.6g} < L_k={lk}")
        elif e.kind == bounds.EXACT and lk != e.value:
            row.violations.append(f"{e.name}={e.value:.6g} != L_k={lk}")
    return row


def _check_job(args) -> SweepRow:
    return check_instance(*args)


def sandwich_sweep(corpus, oracle_cap: int = DEFAULT_ORACLE_CAP, workers: int = 1) -> SweepReport:
    """Check exact L_k against gamma_xk, gamma and every applicable bound.

    ``corpus`` holds ``(label, graph, k)`` or ``(graph, k)`` items.
    """
    jobs = []
    for i, item in enumerate(corpus):
        if len(item) == 2:
            item = (f"#{i}",) + tuple(item)
        jobs.append((item[0], item[1], item[2], oracle_cap))
    if workers <= 1:
        rows = [_check_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_check_job, jobs))
    return SweepReport(rows)


def random_corpus(count: int, seed: int, n_range=(5, 10), ks=(1, 2, 3),
                  ps=(0.2, 0.5, 0.8)) -> list[tuple[str, Graph, int]]:
    """Seeded G(n, p) instances cycling through n, p and k."""
    lo, hi = n_range
    grid = list(itertools.product(range(lo, hi + 1), ps, ks))
    out = []
    for i in range(count):
        n, p, k = grid[i % len(grid)]
        gs = trial_seed(seed, i)
        out.append((f"gnp({n},{p},{gs})", gnp_graph(n, p, gs), k))
    return out


def named_corpus() -> list[tuple[str, Graph, int]]:
    out = []
    for n in range(3, 9):
        for k in (1, 2):
            out.append((f"cycle {n}", cycle_graph(n), k))
    for n in (2, 3, 4):
        out.append((f"rook {n}", rook_graph(n), 1))
    for fam, n in (("complete", 5), ("path", 6), ("star", 5)):
        for k in (1, 2, 3):
            out.append((f"{fam} {n}", generate(fam, n), k))
    out.append(("complete 5", generate("complete", 5), 6))
    return out


def sharpness_sweep(k_max: int) -> list[tuple[int, float]]:
    """(k, (k+1)^(-1/k)) for k = Delta = 1..k_max."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    return [(k, bounds.sharpness_ratio(k)) for k in range(1, k_max + 1)]


def lower_bound_suite(seed: int, count: int = 24) -> list[tuple[str, Graph, int]]:
    """Mixed random-regular / G(n,p) instances with 1 <= k <= Delta and n <= 200."""
    specs = []
    regular = [(60, 6, 2), (60, 6, 6), (100, 4, 1), (100, 10, 3), (120, 8, 8),
               (200, 3, 1), (200, 20, 10), (50, 12, 5), (80, 30, 25), (150, 5, 5),
               (90, 2, 1), (200, 40, 25)]
    for i, (n, d, k) in enumerate(regular[: (count + 1) // 2]):
        gs = trial_seed(seed, i)
        specs.append((f"random_regular({n},{d},{gs})", generate("random_regular", n, d=d, seed=gs), k))
    gnp = [(60, 0.1, 1), (100, 0.05, 2), (150, 0.3, 4), (200, 0.02, 1), (120, 0.5, 10),
           (80, 0.15, 3), (200, 0.1, 6), (40, 0.7, 12), (100, 0.25, 20), (180, 0.04, 2),
           (70, 0.4, 1), (160, 0.08, 5)]
    for i, (n, p, k) in enumerate(gnp[: count // 2]):
        gs = trial_seed(seed, 1000 + i)
        g = gnp_graph(n, p, gs)
        k = max(1, min(k, max_degree(g)))
        specs.append((f"gnp({n},{p},{gs})", g, k))
    return specs

