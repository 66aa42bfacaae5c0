"""Modified FOX (mFOX).

Differences from :mod:`foxopt.fox`:

* the initial population is improved with opposition-based learning;
* the exploitation jump and the random walk are probes around the incumbent
  best and replace it only when they improve on it;
* the random walk is scaled by a quadratic schedule that falls from 1 to 0
  and takes standard normal steps;
* a third phase moves each fox relative to a randomly chosen peer.

Phase selection per agent: ``r <= r_exploit`` jump, ``r < r_walk`` walk,
otherwise peer move. Peer moves read positions and fitness values frozen at the
start of the sweep, so the order in which agents are processed only matters
through the shared best position.

By default (``agent_update="greedy_peer"``) probes leave the fox where it is
and a peer move is kept only if it improves that fox, so the swarm retains the
spread of its opposition-initialised positions. ``agent_update="always"``
writes every candidate into the acting fox instead.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Agent,
    Bounds,
    BudgetExhausted,
    ConfigError,
    Evaluator,
    Population,
    Problem,
    RunConfig,
    RunRecord,
    clamp,
    init_population,
    make_rng,
    select_best,
    uniform_open_closed,
)
from .fox import FoxParams, draw_steps, fox_exploit


# "greedy_peer": jump and walk candidates only compete for the best position;
# a fox moves only when its peer move improves on its own fitness.
# "always": every candidate becomes the acting fox's position.
AGENT_UPDATE = ("greedy_peer", "always")


@dataclass(frozen=True)
class MfoxParams:
    c1: float = 0.18
    c2: float = 0.82
    p_threshold: float = 0.18
    r_exploit: float = 0.2
    r_walk: float = 0.6
    rn_pool: tuple[int, ...] = (1, 1, 2)
    step_noise: str = "normal"
    agent_update: str = "greedy_peer"

    def __post_init__(self):
        if self.agent_update not in AGENT_UPDATE:
            raise ConfigError(f"agent_update must be one of {AGENT_UPDATE}")
        if not 0 < self.r_exploit < self.r_walk < 1:
            raise ConfigError("need 0 < r_exploit < r_walk < 1")
        if not 0 < self.p_threshold < 1:
            raise ConfigError("p_threshold must lie in (0, 1)")
        if not self.rn_pool or min(self.rn_pool) < 1:
            raise ConfigError("rn_pool must hold positive integers")
        self.jump  # validates step_noise

    @property
    def jump(self) -> FoxParams:
        return FoxParams(c1=self.c1, c2=self.c2, p_threshold=self.p_threshold,
                         step_noise=self.step_noise)


def obl_opposite(position: np.ndarray, bounds: Bounds) -> np.ndarray:
    return bounds.lower + bounds.upper - position


def obl_init(population: Population, problem: Problem, evaluate, inplace: bool = False) -> Population:
    """Replace each agent by its opposite point when the opposite is strictly fitter.

    With ``inplace`` the given population is updated agent by agent, so
    improvements made before a :class:`BudgetExhausted` are kept.
    """
    out = population if inplace else population.copy()
    for i in range(len(out)):
        opposite = obl_opposite(out.positions[i], problem.bounds)
        f = evaluate(opposite)
        if f < out.fitness[i]:
            out.positions[i] = opposite
            out.fitness[i] = f
    return out


def a_modified(it: int, max_it: int) -> float:
    frac = it / max_it
    return 1.0 - 2.0 * frac + frac * frac


def random_walk(best_position: np.ndarray, z: np.ndarray, a_mod: float) -> np.ndarray:
    """Step around the best position; ``z`` is a standard normal vector."""
    return best_position + z * a_mod


def peer_explore(agent: Agent, peer: Agent, a_mod: float, u: np.ndarray, rn: int) -> np.ndarray:
    """Move ``agent`` relative to ``peer``.

    A fitter peer pulls the agent toward it (step ``u / rn``); otherwise the
    agent is pushed away from the peer with a step scaled by ``a_mod``.
    """
    x_i, x_p = agent.position, peer.position
    if peer.fitness < agent.fitness:
        return x_i + (u / rn) * (x_p - rn * x_i)
    return x_i + a_mod * u * (x_i - rn * x_p)


EXPLOIT, WALK, PEER = 0, 1, 2


def select_phases(r: np.ndarray, params: MfoxParams = MfoxParams()) -> np.ndarray:
    """Phase code per agent from its uniform draw ``r``."""
    return np.where(r <= params.r_exploit, EXPLOIT, np.where(r < params.r_walk, WALK, PEER))


def draw_rn(rng: np.random.Generator, size: int, pool=(1, 1, 2)) -> np.ndarray:
    pool = np.asarray(pool)
    return pool[rng.integers(0, pool.size, size)]


def pick_peer(i: int, offset: int) -> int:
    """Map ``offset`` drawn from ``range(pop - 1)`` onto an index other than ``i``."""
    return offset if offset < i else offset + 1


def mfox_run(problem: Problem, config: RunConfig, params: MfoxParams = MfoxParams()) -> RunRecord:
    rng = make_rng(config.seed)
    evaluate = Evaluator(problem, rng, config.fe_budget)
    bounds = problem.bounds
    n, dim = config.pop, problem.dim
    jump_params = params.jump
    greedy = params.agent_update == "greedy_peer"

    pop = init_population(n, problem, rng, evaluate)
    try:
        obl_init(pop, problem, evaluate, inplace=True)
    except BudgetExhausted:
        best_x, best_f = select_best(pop)
        return RunRecord(best_x, best_f, [], evaluate.count)
    best_x, best_f = select_best(pop)
    record = RunRecord(best_x, best_f)

    for it in range(1, config.max_iterations + 1):
        a_mod = a_modified(it, config.max_iterations)
        phase = select_phases(rng.random(n), params)
        p = rng.random(n)
        time_st = uniform_open_closed(rng, (n, dim))
        z = draw_steps(rng, (n, dim), params.step_noise)
        u = rng.random((n, dim))
        rn = draw_rn(rng, n, params.rn_pool)
        peers = rng.integers(0, n - 1, n)

        frozen = pop.copy()
        done = 0
        try:
            for i in range(n):
                if phase[i] == PEER:
                    j = pick_peer(i, int(peers[i]))
                    x = peer_explore(frozen.agent(i), frozen.agent(j), a_mod, u[i], int(rn[i]))
                elif phase[i] == EXPLOIT:
                    x = fox_exploit(best_x, time_st[i], p[i], jump_params)
                else:
                    x = random_walk(best_x, z[i], a_mod)
                x = clamp(x, bounds)
                f = evaluate(x)
                done += 1
                if phase[i] != PEER and f < best_f:
                    best_x, best_f = x.copy(), f
                if greedy and (phase[i] != PEER or f >= pop.fitness[i]):
                    continue
                pop.positions[i] = x
                pop.fitness[i] = f
        except BudgetExhausted:
            pass

        if done:
            k = int(np.argmin(pop.fitness))
            if pop.fitness[k] < best_f:
                best_x, best_f = pop.positions[k].copy(), float(pop.fitness[k])
            record.trace.append((it, best_f))
        if done < n:
            break

    record.best_position, record.best_fitness = best_x, best_f
    record.evaluations_used = evaluate.count
    return record
