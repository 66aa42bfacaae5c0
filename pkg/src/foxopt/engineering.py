"""Constrained engineering design problems and a static penalty wrapper.

Constraints follow the ``g(x) <= 0`` feasibility convention. The penalized
objective is ``f(x) + coefficient * sum(max(0, g_i(x)) ** exponent)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import Bounds, ConfigError, Problem

Func = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class PenaltyConfig:
    coefficient: float = 1e10
    exponent: int = 2

    def __post_init__(self):
        if not self.coefficient > 0:
            raise ConfigError("penalty coefficient must be positive")
        if self.exponent < 1:
            raise ConfigError("penalty exponent must be at least 1")


@dataclass(frozen=True)
class ConstrainedProblem:
    name: str
    bounds: Bounds
    raw_objective: Func
    inequality_constraints: Sequence[Func]
    f_min: float

    @property
    def dim(self) -> int:
        return self.bounds.dim

    def constraint_values(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.array([g(x) for g in self.inequality_constraints])

    def max_violation(self, x) -> float:
        return float(max(0.0, np.max(self.constraint_values(x))))

    def as_problem(self, cfg: PenaltyConfig = PenaltyConfig()) -> Problem:
        return Problem(self.name, self.bounds, lambda x: penalize(self, x, cfg))


def penalize(problem: ConstrainedProblem, x, cfg: PenaltyConfig = PenaltyConfig()) -> float:
    x = np.asarray(x, dtype=float)
    f = problem.raw_objective(x)
    if not math.isfinite(f):
        return math.inf
    g = problem.constraint_values(x)
    # nan constraints (log singularities) count as infinitely violated
    if np.any(np.isnan(g)):
        return math.inf
    violation = np.maximum(0.0, g)
    return float(f + cfg.coefficient * np.sum(violation ** cfg.exponent))


def spring_problem() -> ConstrainedProblem:
    """Tension/compression spring weight; x = (wire d, coil D, active coils N)."""

    def f(x):
        return (x[2] + 2) * x[1] * x[0] ** 2

    gs = [
        lambda x: 1 - x[1] ** 3 * x[2] / (71785 * x[0] ** 4),
        lambda x: ((4 * x[1] ** 2 - x[0] * x[1]) / (12566 * (x[0] ** 3 * x[1] - x[0] ** 4))
                   + 1 / (5108 * x[0] ** 2) - 1),
        lambda x: 1 - 140.45 * x[0] / (x[1] ** 2 * x[2]),
        lambda x: (x[0] + x[1]) / 1.5 - 1,
    ]
    return ConstrainedProblem("spring", Bounds([0.05, 0.25, 2.0], [2.0, 1.3, 15.0]), f, gs,
                              0.012665232788)


def pressure_vessel_problem() -> ConstrainedProblem:
    """Pressure vessel cost; x = (shell thickness, head thickness, radius, length)."""

    def f(x):
        x1, x2, x3, x4 = x
        return 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3 ** 2 + 3.1661 * x1 ** 2 * x4 + 19.84 * x1 ** 2 * x3

    gs = [
        lambda x: -x[1] + 0.00954 * x[2],
        lambda x: -x[0] + 0.0193 * x[2],
        lambda x: x[3] - 240,
        lambda x: -math.pi * x[2] ** 2 * x[3] - 4 / 3 * math.pi * x[2] ** 3 + 1296000,
    ]
    return ConstrainedProblem("vessel", Bounds([0, 0, 10, 10], [100, 100, 200, 200]), f, gs,
                              5885.3327736)


def gas_compressor_problem() -> ConstrainedProblem:
    def f(x):
        x1, x2, x3, x4 = x
        return (8.61e5 * x1 ** 0.5 * x2 * x3 ** (-2 / 3) * x4 ** -0.5 + 3.69e4 * x3
                + 7.72e8 / x1 * x2 ** 0.219 - 765.43e6 / x1)

    gs = [lambda x: x[3] * x[1] ** -2 + x[1] ** -2 - 1]
    return ConstrainedProblem("compressor", Bounds([20, 1, 20, 0.1], [50, 10, 50, 60]), f, gs,
                              2964895.4173)


def _bearing_terms(x):
    R, R0, mu, Q = x
    P = (math.log10(math.log10(8.122e6 * mu + 0.8)) - 10.04) / -3.55
    dT = 2 * (10 ** P - 560)
    Ef = 9336 * Q * 0.0307 * 0.5 * dT
    h = (2 * math.pi * 750 / 60) ** 2 * 2 * math.pi * mu / Ef * (R ** 4 / 4 - R0 ** 4 / 4) - 1e-5
    log_ratio = math.log(R / R0)
    P0 = 6 * mu * Q / (math.pi * h ** 3) * log_ratio
    W = math.pi * P0 / 2 * (R ** 2 - R0 ** 2) / (log_ratio - 1e-5)
    return dict(P=P, dT=dT, Ef=Ef, h=h, P0=P0, W=W)


def thrust_bearing_problem() -> ConstrainedProblem:
    """Hydrostatic thrust bearing power loss; x = (R, R0, mu, Q).

    Uses the CEC2020 real-world suite formulation: objective scaled by 1/12,
    offsets on ``h`` and ``W``.
    """

    def f(x):
        if x[0] == x[1]:
            return math.inf
        t = _bearing_terms(x)
        return (x[3] * t["P0"] / 0.7 + t["Ef"]) / 12

    def term(fn):
        def g(x):
            if x[0] == x[1]:
                return math.nan
            return fn(x, _bearing_terms(x))
        return g

    gs = [
        term(lambda x, t: 101000 - t["W"]),
        term(lambda x, t: t["P0"] - 1000),
        term(lambda x, t: t["dT"] - 50),
        term(lambda x, t: 0.001 - t["h"]),
        lambda x: x[1] - x[0],
        term(lambda x, t: 0.0307 / (386.4 * t["P0"]) * (x[3] / (2 * math.pi * x[0] * t["h"])) - 0.001),
        term(lambda x, t: t["W"] / (math.pi * (x[0] ** 2 - x[1] ** 2) + 1e-5) - 5000),
    ]
    return ConstrainedProblem("bearing", Bounds([1, 1, 1e-6, 1], [16, 16, 16e-6, 16]), f, gs,
                              1625.4428092)


ENGINEERING = {
    "spring": spring_problem,
    "vessel": pressure_vessel_problem,
    "compressor": gas_compressor_problem,
    "bearing": thrust_bearing_problem,
}
ENGINEERING_IDS = tuple(ENGINEERING)


def make_engineering(id: str) -> ConstrainedProblem:
    try:
        return ENGINEERING[id.lower()]()
    except KeyError:
        raise ConfigError(f"unknown engineering problem {id!r}; expected one of {ENGINEERING_IDS}") from None
