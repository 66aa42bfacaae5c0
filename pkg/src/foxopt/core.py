"""Shared types for the FOX family of optimizers.

Populations are stored as a ``(pop, dim)`` position matrix plus a fitness
vector; :class:`Agent` is a lightweight row view used where a single fox is
passed around.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


class ConfigError(ValueError):
    """Invalid bounds, run configuration, or registry id."""


class BudgetExhausted(Exception):
    """Raised by :class:`Evaluator` when the FE budget is used up."""


@dataclass(frozen=True)
class Bounds:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.shape != upper.shape or lower.ndim != 1:
            raise ConfigError("lower and upper bounds must be 1-D vectors of equal length")
        if not np.all(lower < upper):
            raise ConfigError("every lower bound must be strictly below its upper bound")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dim: int) -> "Bounds":
        return cls(np.full(dim, low), np.full(dim, high))

    @property
    def dim(self) -> int:
        return self.lower.size


@dataclass(frozen=True)
class Problem:
    """Box-bounded black-box objective to be minimized.

    ``func`` takes a position vector. When ``noisy`` is set it also receives
    the run's random generator so that noise stays on the run's stream.
    """

    name: str
    bounds: Bounds
    func: Callable[..., float]
    noisy: bool = False

    @property
    def dim(self) -> int:
        return self.bounds.dim

    def evaluate(self, x: np.ndarray, rng: Optional[np.random.Generator] = None) -> float:
        if self.noisy:
            if rng is None:
                raise ConfigError(f"{self.name} is stochastic and needs a random generator")
            return float(self.func(x, rng))
        return float(self.func(x))


class Evaluator:
    """Run-local objective wrapper that counts function evaluations."""

    def __init__(self, problem: Problem, rng: np.random.Generator, budget: Optional[int] = None):
        self.problem = problem
        self.rng = rng
        self.budget = budget
        self.count = 0

    def __call__(self, x: np.ndarray) -> float:
        if self.budget is not None and self.count >= self.budget:
            raise BudgetExhausted
        self.count += 1
        return self.problem.evaluate(x, self.rng)

    @property
    def remaining(self) -> Optional[int]:
        return None if self.budget is None else self.budget - self.count


@dataclass(frozen=True)
class RunConfig:
    pop: int = 30
    max_iterations: int = 1000
    fe_budget: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.pop < 2:
            raise ConfigError("population size must be at least 2")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be at least 1")
        if self.fe_budget is not None and self.fe_budget < self.pop:
            raise ConfigError("fe_budget must cover at least one population evaluation")


@dataclass
class RunRecord:
    best_position: np.ndarray
    best_fitness: float
    trace: list[tuple[int, float]] = field(default_factory=list)
    evaluations_used: int = 0


@dataclass(frozen=True)
class Agent:
    position: np.ndarray
    fitness: float = np.inf


@dataclass
class Population:
    positions: np.ndarray
    fitness: np.ndarray

    def __len__(self) -> int:
        return self.positions.shape[0]

    def agent(self, i: int) -> Agent:
        return Agent(self.positions[i], float(self.fitness[i]))

    def copy(self) -> "Population":
        return Population(self.positions.copy(), self.fitness.copy())


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def uniform_open_closed(rng: np.random.Generator, size) -> np.ndarray:
    """Uniform draws on (0, 1], safe to divide by."""
    return 1.0 - rng.random(size)


def init_population(pop: int, problem: Problem, rng: np.random.Generator,
                    evaluate: Optional[Callable[[np.ndarray], float]] = None) -> Population:
    """Draw ``pop`` agents uniformly in the box and evaluate each once."""
    if pop < 2:
        raise ConfigError("population size must be at least 2")
    if evaluate is None:
        evaluate = lambda x: problem.evaluate(x, rng)  # noqa: E731
    lo, hi = problem.bounds.lower, problem.bounds.upper
    positions = lo + rng.random((pop, problem.dim)) * (hi - lo)
    # guard against rounding up to the upper edge
    positions = np.minimum(positions, np.nextafter(hi, lo))
    fitness = np.full(pop, np.inf)
    for i in range(pop):
        fitness[i] = evaluate(positions[i])
    return Population(positions, fitness)


def clamp(position: np.ndarray, bounds: Bounds) -> np.ndarray:
    return np.clip(position, bounds.lower, bounds.upper)


def select_best(population: Population) -> tuple[np.ndarray, float]:
    """Minimum-fitness agent; ties go to the lowest index."""
    if len(population) == 0:
        raise ConfigError("cannot select from an empty population")
    # argmin returns the first occurrence, and all-inf still yields index 0
    i = int(np.argmin(population.fitness))
    return population.positions[i].copy(), float(population.fitness[i])
