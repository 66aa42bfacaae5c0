"""Batch experiment runner.

Every (algorithm, problem, run k) triple runs with seed ``base_seed + k``, so
the whole output directory is a function of the configuration. Runs are
independent and may be farmed out to worker processes; aggregation happens
afterwards in a single process and in a fixed order.
"""
from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .benchmarks import BENCHMARKS, CLASSICAL_IDS, make_benchmark
from .core import ConfigError, Problem, RunConfig, RunRecord
from .engineering import ENGINEERING, ENGINEERING_IDS, PenaltyConfig, make_engineering
from .fox import fox_run
from .mfox import mfox_run
from .stats import Summary, competition_rank, summarize, wilcoxon_ranksum

log = logging.getLogger(__name__)

ALGORITHMS: dict[str, Callable[[Problem, RunConfig], RunRecord]] = {
    "mfox": mfox_run,
    "fox": fox_run,
}

SUITES = {
    "classical": CLASSICAL_IDS,
    "engineering": ENGINEERING_IDS,
}


def resolve_suite(spec: str) -> list[str]:
    """``classical``, ``engineering`` or a comma-separated list of problem ids."""
    out: list[str] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        out.extend(SUITES.get(part.lower(), [part]))
    return out


def resolve_problem(pid: str, penalty: PenaltyConfig = PenaltyConfig()) -> Problem:
    if pid.upper() in BENCHMARKS:
        return make_benchmark(pid)
    if pid.lower() in ENGINEERING:
        return make_engineering(pid).as_problem(penalty)
    raise ConfigError(f"unknown problem id {pid!r}")


@dataclass
class ExperimentConfig:
    algorithms: list[str] = field(default_factory=lambda: ["mfox", "fox"])
    problems: list[str] = field(default_factory=lambda: list(CLASSICAL_IDS))
    runs: int = 30
    pop: int = 30
    max_iterations: int = 1000
    fe_budget: Optional[int] = None
    base_seed: int = 0
    output_dir: Path = Path("results")
    penalty: PenaltyConfig = field(default_factory=PenaltyConfig)
    parallel: int = 1

    def validate(self) -> None:
        if self.runs < 1:
            raise ConfigError("runs must be at least 1")
        if not self.algorithms:
            raise ConfigError("no algorithms configured")
        if not self.problems:
            raise ConfigError("no problems configured")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {a!r}; expected one of {tuple(ALGORITHMS)}")
        for p in self.problems:
            resolve_problem(p, self.penalty)
        RunConfig(self.pop, self.max_iterations, self.fe_budget, self.base_seed)

    def run_config(self, k: int) -> RunConfig:
        return RunConfig(self.pop, self.max_iterations, self.fe_budget, self.base_seed + k)


@dataclass
class CellResult:
    algorithm: str
    problem: str
    finals: list[float]
    summary: Summary
    best_position: list[float]
    trace_iterations: np.ndarray
    trace_mean: np.ndarray
    trace_min: np.ndarray
    trace_max: np.ndarray
    rank: int = 0
    p_values: dict[str, float] = field(default_factory=dict)


@dataclass
class ResultsBundle:
    config: ExperimentConfig
    cells: dict[tuple[str, str], CellResult] = field(default_factory=dict)

    def cell(self, problem: str, algorithm: str) -> CellResult:
        return self.cells[(problem, algorithm)]

    @property
    def problems(self) -> list[str]:
        return [p for p in self.config.problems if any(k[0] == p for k in self.cells)]


def _execute(task: tuple[str, str, PenaltyConfig, RunConfig]) -> RunRecord:
    algo, pid, penalty, cfg = task
    return ALGORITHMS[algo](resolve_problem(pid, penalty), cfg)


def _stack_traces(records: Sequence[RunRecord]):
    # budget-limited runs can stop early; carry their last value forward
    length = max(len(r.trace) for r in records)
    if length == 0:
        empty = np.zeros(0)
        return empty.astype(int), empty, empty, empty
    mat = np.empty((len(records), length))
    for i, r in enumerate(records):
        vals = [v for _, v in r.trace] or [r.best_fitness]
        mat[i, :len(vals)] = vals
        mat[i, len(vals):] = vals[-1]
    its = np.arange(1, length + 1)
    return its, mat.mean(axis=0), mat.min(axis=0), mat.max(axis=0)


def _make_cell(algo: str, pid: str, records: Sequence[RunRecord]) -> CellResult:
    finals = [float(r.best_fitness) for r in records]
    best = records[int(np.argmin(finals))]
    its, mean, lo, hi = _stack_traces(records)
    return CellResult(algo, pid, finals, summarize(finals), [float(v) for v in best.best_position],
                      its, mean, lo, hi)


def _compare(bundle: ResultsBundle, pid: str) -> None:
    algos = [a for a in bundle.config.algorithms if (pid, a) in bundle.cells]
    ranks = competition_rank([bundle.cell(pid, a).summary.avg for a in algos])
    for a, r in zip(algos, ranks):
        bundle.cell(pid, a).rank = r
    for a in algos:
        for b in algos:
            if a != b:
                bundle.cell(pid, a).p_values[b] = wilcoxon_ranksum(
                    bundle.cell(pid, a).finals, bundle.cell(pid, b).finals)


def run_experiment(config: ExperimentConfig, write: bool = True) -> ResultsBundle:
    """Run every configured (algorithm, problem, run) and aggregate.

    Output files are written to ``config.output_dir`` when ``write`` is set;
    if a run fails, whatever problems completed are still written before the
    error propagates.
    """
    config.validate()
    bundle = ResultsBundle(config)
    pool = ProcessPoolExecutor(config.parallel) if config.parallel > 1 else None
    mapper = pool.map if pool else map
    try:
        for pid in config.problems:
            tasks = [(a, pid, config.penalty, config.run_config(k))
                     for a in config.algorithms for k in range(config.runs)]
            records = list(mapper(_execute, tasks))
            for i, algo in enumerate(config.algorithms):
                chunk = records[i * config.runs:(i + 1) * config.runs]
                bundle.cells[(pid, algo)] = _make_cell(algo, pid, chunk)
            _compare(bundle, pid)
            log.info("finished %s", pid)
    finally:
        if pool:
            pool.shutdown()
        if write and bundle.cells:
            write_outputs(bundle, Path(config.output_dir))
    return bundle


def _sci(v: float) -> str:
    return "NaN" if math.isnan(v) else f"{v:.3e}"


def emit_summary_csv(bundle: ResultsBundle, path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["problem", "algorithm", "avg", "std", "best", "worst", "rank"])
        for pid in bundle.problems:
            for algo in bundle.config.algorithms:
                c = bundle.cell(pid, algo)
                s = c.summary
                w.writerow([pid, algo, _sci(s.avg), _sci(s.std), _sci(s.best), _sci(s.worst), c.rank])
    return path


def emit_wilcoxon_csv(bundle: ResultsBundle, path: Path) -> Path:
    """Matrix layout: one row per (problem, algorithm), one column per opponent."""
    algos = bundle.config.algorithms
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["problem", "algorithm", *[f"vs_{a}" for a in algos]])
        for pid in bundle.problems:
            for a in algos:
                c = bundle.cell(pid, a)
                w.writerow([pid, a, *["-" if b == a else _sci(c.p_values[b]) for b in algos]])
    return path


def emit_traces(bundle: ResultsBundle, directory: Path) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for (pid, algo), c in sorted(bundle.cells.items()):
        path = directory / f"{algo}_{pid}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["iteration", "mean_best", "min_best", "max_best"])
            for row in zip(c.trace_iterations, c.trace_mean, c.trace_min, c.trace_max):
                w.writerow([int(row[0]), *(repr(float(v)) for v in row[1:])])
        paths.append(path)
    return paths


def _json_float(v: float):
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


def bundle_to_dict(bundle: ResultsBundle) -> dict:
    cfg = asdict(bundle.config)
    cfg["output_dir"] = str(bundle.config.output_dir)
    cells = []
    for pid in bundle.problems:
        for algo in bundle.config.algorithms:
            c = bundle.cell(pid, algo)
            cells.append({
                "problem": pid,
                "algorithm": algo,
                "summary": {k: _json_float(v) for k, v in c.summary._asdict().items()},
                "rank": c.rank,
                "p_values": {k: _json_float(v) for k, v in c.p_values.items()},
                "finals": [_json_float(v) for v in c.finals],
                "best_position": c.best_position,
                "mean_trace": [_json_float(float(v)) for v in c.trace_mean],
            })
    return {"config": cfg, "results": cells}


def write_outputs(bundle: ResultsBundle, out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    emit_summary_csv(bundle, out / "summary.csv")
    emit_wilcoxon_csv(bundle, out / "wilcoxon.csv")
    emit_traces(bundle, out / "traces")
    with open(out / "bundle.json", "w") as fh:
        json.dump(bundle_to_dict(bundle), fh, indent=1, sort_keys=True)
        fh.write("\n")
