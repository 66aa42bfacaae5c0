"""Command-line entry point: ``python -m foxopt`` or ``foxopt``.

Settings come from an optional flat ``key = value`` file (``#`` starts a
comment) and are overridden by command-line flags. Recognised keys match the
long flag names: algo, suite, runs, pop, iters, fes, seed, out, parallel,
penalty_coefficient, penalty_exponent.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import ConfigError
from .engineering import PenaltyConfig
from .harness import ExperimentConfig, resolve_suite, run_experiment

INT_KEYS = {"runs", "pop", "iters", "fes", "seed", "parallel", "penalty_exponent"}
FLOAT_KEYS = {"penalty_coefficient"}
STR_KEYS = {"algo", "suite", "out"}
KEYS = INT_KEYS | FLOAT_KEYS | STR_KEYS


def parse_config_file(path: Path) -> dict:
    settings: dict = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        settings[key] = _coerce(key, value)
    return settings


def _coerce(key: str, value: str):
    try:
        if key in INT_KEYS:
            return int(value)
        if key in FLOAT_KEYS:
            return float(value)
    except ValueError:
        raise ConfigError(f"{key}: cannot parse {value!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="foxopt", description="Run FOX / mFOX benchmark experiments.")
    p.add_argument("--config", type=Path, help="flat key = value settings file")
    p.add_argument("--algo", help="comma-separated algorithms (mfox, fox)")
    p.add_argument("--suite", help="classical, engineering, or comma-separated problem ids")
    p.add_argument("--runs", type=int)
    p.add_argument("--pop", type=int)
    p.add_argument("--iters", type=int)
    p.add_argument("--fes", type=int, help="function-evaluation budget per run")
    p.add_argument("--seed", type=int, help="base seed; run k uses seed + k")
    p.add_argument("--out", help="output directory")
    p.add_argument("--parallel", type=int, help="worker processes")
    p.add_argument("--penalty-coefficient", dest="penalty_coefficient", type=float)
    p.add_argument("--penalty-exponent", dest="penalty_exponent", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def make_config(settings: dict) -> ExperimentConfig:
    cfg = ExperimentConfig()
    if "algo" in settings:
        cfg.algorithms = [a.strip().lower() for a in settings["algo"].split(",") if a.strip()]
    if "suite" in settings:
        cfg.problems = resolve_suite(settings["suite"])
    for key, attr in [("runs", "runs"), ("pop", "pop"), ("iters", "max_iterations"),
                      ("fes", "fe_budget"), ("seed", "base_seed"), ("parallel", "parallel")]:
        if key in settings:
            setattr(cfg, attr, settings[key])
    if "out" in settings:
        cfg.output_dir = Path(settings["out"])
    cfg.penalty = PenaltyConfig(settings.get("penalty_coefficient", cfg.penalty.coefficient),
                                settings.get("penalty_exponent", cfg.penalty.exponent))
    if cfg.parallel < 1:
        raise ConfigError("parallel must be at least 1")
    cfg.validate()
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        settings = parse_config_file(args.config) if args.config else {}
        settings.update({k: v for k, v in vars(args).items() if k in KEYS and v is not None})
        cfg = make_config(settings)
    except ConfigError as exc:
        print(f"foxopt: error: {exc}", file=sys.stderr)
        return 2
    bundle = run_experiment(cfg)
    print(f"wrote {len(bundle.cells)} result cells to {cfg.output_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
