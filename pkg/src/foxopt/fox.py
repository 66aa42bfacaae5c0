"""Original FOX optimizer (red-fox jump / random-walk search).

Each iteration draws, per agent, a phase selector ``r``: agents with
``r >= r_split`` jump toward the prey (exploitation) and the others walk
randomly around the best position (exploration). Walk steps are standard
normal; uniform steps only push coordinates upward and stall on shifted
optima such as F6 and F12. All randomness for an
iteration is drawn up front in a fixed order, which makes a run a pure
function of its seed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BudgetExhausted,
    ConfigError,
    Evaluator,
    Problem,
    RunConfig,
    RunRecord,
    clamp,
    init_population,
    make_rng,
    select_best,
    uniform_open_closed,
)

GRAVITY = 9.81
STEP_NOISE = ("normal", "uniform")


def draw_steps(rng: np.random.Generator, size, noise: str = "normal") -> np.ndarray:
    """Walk step matrix: standard normal, or uniform on [0, 1)."""
    return rng.standard_normal(size) if noise == "normal" else rng.random(size)


@dataclass(frozen=True)
class FoxParams:
    c1: float = 0.18
    c2: float = 0.82
    p_threshold: float = 0.18
    r_split: float = 0.5
    step_noise: str = "normal"

    def __post_init__(self):
        if self.step_noise not in STEP_NOISE:
            raise ConfigError(f"step_noise must be one of {STEP_NOISE}")
        if not 0 < self.p_threshold < 1:
            raise ConfigError("p_threshold must lie in (0, 1)")
        if not 0 < self.r_split < 1:
            raise ConfigError("r_split must lie in (0, 1)")


def speed_of_sound(best_position: np.ndarray, time_st: np.ndarray) -> np.ndarray:
    return np.asarray(best_position, dtype=float) / time_st


def jump_height(t: float) -> float:
    return 0.5 * GRAVITY * t * t


def fox_exploit(best_position: np.ndarray, time_st: np.ndarray, p: float,
                params: FoxParams = FoxParams()) -> np.ndarray:
    """Jump toward the prey.

    Parameters
    ----------
    best_position : ndarray
        Current best position (the prey).
    time_st : ndarray
        Sound travel times, one per dimension, in (0, 1].
    p : float
        Direction draw in [0, 1); ``p > p_threshold`` selects ``c1``.
    """
    sp_s = speed_of_sound(best_position, time_st)
    dist_st = sp_s * time_st
    dist_fox_prey = dist_st * 0.5
    tt = float(np.mean(time_st))
    jump = jump_height(tt / 2)
    c = params.c1 if p > params.p_threshold else params.c2
    return dist_fox_prey * jump * c


def fox_a_schedule(it: int, max_it: int) -> float:
    return 2.0 * (1.0 - it / max_it)


def fox_explore(best_position: np.ndarray, z: np.ndarray, min_t: float, a: float) -> np.ndarray:
    """Random step around the best position; ``z`` is a standard normal vector."""
    return best_position + z * min_t * a


def fox_run(problem: Problem, config: RunConfig, params: FoxParams = FoxParams()) -> RunRecord:
    rng = make_rng(config.seed)
    evaluate = Evaluator(problem, rng, config.fe_budget)
    bounds = problem.bounds
    n, dim = config.pop, problem.dim

    pop = init_population(n, problem, rng, evaluate)
    best_x, best_f = select_best(pop)
    record = RunRecord(best_x, best_f)
    min_t = np.inf

    for it in range(1, config.max_iterations + 1):
        a = fox_a_schedule(it, config.max_iterations)
        r = rng.random(n)
        p = rng.random(n)
        time_st = uniform_open_closed(rng, (n, dim))
        z = draw_steps(rng, (n, dim), params.step_noise)
        min_t = min(min_t, float(time_st.mean(axis=1).min()))

        done = 0
        try:
            for i in range(n):
                if r[i] >= params.r_split:
                    x = fox_exploit(best_x, time_st[i], p[i], params)
                else:
                    x = fox_explore(best_x, z[i], min_t, a)
                x = clamp(x, bounds)
                f = evaluate(x)
                done += 1
                pop.positions[i] = x
                pop.fitness[i] = f
                if f < best_f:
                    best_x, best_f = x.copy(), f
        except BudgetExhausted:
            if done:
                record.trace.append((it, best_f))
            break
        record.trace.append((it, best_f))

    record.best_position, record.best_fitness = best_x, best_f
    record.evaluations_used = evaluate.count
    return record
