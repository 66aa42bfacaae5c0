"""The 23 classical test functions F1-F23.

F1-F7 are unimodal, F8-F13 multimodal (both in 30 dimensions), F14-F23 are
low-dimensional multimodal functions with fixed dimension. Constant tables for
F14-F23 follow the CEC 2005 / Yao et al. definitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Bounds, ConfigError, Problem

PI = np.pi


def _u(x: np.ndarray, a: float, k: float, m: int) -> np.ndarray:
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def f1(x):
    return float(np.dot(x, x))


def f2(x):
    ax = np.abs(x)
    return float(ax.sum() + np.prod(ax))


def f3(x):
    c = np.cumsum(x)
    return float(np.dot(c, c))


def f4(x):
    return float(np.max(np.abs(x)))


def f5(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def f6(x):
    # smooth variant, no floor
    s = x + 0.5
    return float(np.dot(s, s))


def f7(x, rng: np.random.Generator):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x ** 4) + rng.random())


def f8(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def f9(x):
    return float(np.sum(x * x - 10.0 * np.cos(2 * PI * x) + 10.0))


def f10(x):
    n = x.size
    return float(-20.0 * np.exp(-0.2 * np.sqrt(np.dot(x, x) / n))
                 - np.exp(np.sum(np.cos(2 * PI * x)) / n) + 20.0 + np.e)


def f11(x):
    i = np.arange(1, x.size + 1)
    return float(np.dot(x, x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def f12(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (10.0 * np.sin(PI * y[0]) ** 2
            + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(PI * y[1:]) ** 2))
            + (y[-1] - 1.0) ** 2)
    return float(PI / n * body + np.sum(_u(x, 10, 100, 4)))


def f13(x):
    body = (np.sin(3 * PI * x[0]) ** 2
            + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3 * PI * x[1:]) ** 2))
            + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2 * PI * x[-1]) ** 2))
    return float(0.1 * body + np.sum(_u(x, 5, 100, 4)))


_FOXHOLES = np.array([
    [-32, -16, 0, 16, 32] * 5,
    [v for v in (-32, -16, 0, 16, 32) for _ in range(5)],
], dtype=float)


def f14(x):
    d = np.sum((x[:, None] - _FOXHOLES) ** 6, axis=0)
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / (np.arange(1, 26) + d))))


_KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627,
                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16])


def f15(x):
    b = _KOWALIK_B
    model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3])
    return float(np.sum((_KOWALIK_A - model) ** 2))


def f16(x):
    x1, x2 = x
    return float(4 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3 + x1 * x2 - 4 * x2 ** 2 + 4 * x2 ** 4)


def f17(x):
    x1, x2 = x
    return float((x2 - 5.1 / (4 * PI ** 2) * x1 ** 2 + 5 / PI * x1 - 6) ** 2
                 + 10 * (1 - 1 / (8 * PI)) * np.cos(x1) + 10)


def f18(x):
    x1, x2 = x
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1 ** 2 - 14 * x2 + 6 * x1 * x2 + 3 * x2 ** 2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1 ** 2 + 48 * x2 - 36 * x1 * x2 + 27 * x2 ** 2)
    return float(a * b)


_HART_C = np.array([1.0, 1.2, 3.0, 3.2])
_HART3_A = np.array([[3, 10, 30], [0.1, 10, 35], [3, 10, 30], [0.1, 10, 35]], dtype=float)
_HART3_P = np.array([[0.3689, 0.117, 0.2673], [0.4699, 0.4387, 0.747],
                     [0.1091, 0.8732, 0.5547], [0.03815, 0.5743, 0.8828]])
_HART6_A = np.array([[10, 3, 17, 3.5, 1.7, 8], [0.05, 10, 17, 0.1, 8, 14],
                     [3, 3.5, 1.7, 10, 17, 8], [17, 8, 0.05, 10, 0.1, 14]])
_HART6_P = np.array([[0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
                     [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
                     [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.665],
                     [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381]])


def f19(x):
    return float(-np.dot(_HART_C, np.exp(-np.sum(_HART3_A * (x - _HART3_P) ** 2, axis=1))))


def f20(x):
    return float(-np.dot(_HART_C, np.exp(-np.sum(_HART6_A * (x - _HART6_P) ** 2, axis=1))))


_SHEKEL_A = np.array([[4, 4, 4, 4], [1, 1, 1, 1], [8, 8, 8, 8], [6, 6, 6, 6], [3, 7, 3, 7],
                      [2, 9, 2, 9], [5, 5, 3, 3], [8, 1, 8, 1], [6, 2, 6, 2], [7, 3.6, 7, 3.6]])
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _shekel(m: int) -> Callable[[np.ndarray], float]:
    a, c = _SHEKEL_A[:m], _SHEKEL_C[:m]

    def f(x):
        d = x - a
        return float(-np.sum(1.0 / (np.sum(d * d, axis=1) + c)))

    f.__name__ = f"shekel{m}"
    return f


f21, f22, f23 = _shekel(5), _shekel(7), _shekel(10)


@dataclass(frozen=True)
class BenchmarkSpec:
    id: str
    func: Callable
    bounds: Bounds
    f_min: float
    optimum: Optional[np.ndarray] = None
    noisy: bool = False

    @property
    def dim(self) -> int:
        return self.bounds.dim

    @property
    def optimum_known(self) -> bool:
        return self.optimum is not None


def _box(lo, hi, dim):
    return Bounds.uniform(lo, hi, dim)


def _spec_table() -> dict[str, BenchmarkSpec]:
    d = 30
    zeros = np.zeros(d)
    rows = [
        BenchmarkSpec("F1", f1, _box(-100, 100, d), 0.0, zeros),
        BenchmarkSpec("F2", f2, _box(-10, 10, d), 0.0, zeros),
        BenchmarkSpec("F3", f3, _box(-100, 100, d), 0.0, zeros),
        BenchmarkSpec("F4", f4, _box(-100, 100, d), 0.0, zeros),
        BenchmarkSpec("F5", f5, _box(-30, 30, d), 0.0, np.ones(d)),
        BenchmarkSpec("F6", f6, _box(-100, 100, d), 0.0, np.full(d, -0.5)),
        BenchmarkSpec("F7", f7, _box(-1.28, 1.28, d), 0.0, zeros, noisy=True),
        BenchmarkSpec("F8", f8, _box(-500, 500, d), -12569.487, np.full(d, 420.9687)),
        BenchmarkSpec("F9", f9, _box(-5.12, 5.12, d), 0.0, zeros),
        BenchmarkSpec("F10", f10, _box(-32, 32, d), 0.0, zeros),
        BenchmarkSpec("F11", f11, _box(-600, 600, d), 0.0, zeros),
        BenchmarkSpec("F12", f12, _box(-50, 50, d), 0.0, -np.ones(d)),
        BenchmarkSpec("F13", f13, _box(-50, 50, d), 0.0, np.ones(d)),
        BenchmarkSpec("F14", f14, _box(-65, 65, 2), 1.0),
        BenchmarkSpec("F15", f15, _box(-5, 5, 4), 0.00030),
        BenchmarkSpec("F16", f16, _box(-5, 5, 2), -1.0316),
        BenchmarkSpec("F17", f17, Bounds([-5.0, 0.0], [10.0, 15.0]), 0.398),
        BenchmarkSpec("F18", f18, _box(-2, 2, 2), 3.0),
        BenchmarkSpec("F19", f19, _box(0, 1, 3), -3.86),
        BenchmarkSpec("F20", f20, _box(0, 1, 6), -3.32),
        BenchmarkSpec("F21", f21, _box(0, 10, 4), -10.1532),
        BenchmarkSpec("F22", f22, _box(0, 10, 4), -10.4028),
        BenchmarkSpec("F23", f23, _box(0, 10, 4), -10.5363),
    ]
    return {r.id: r for r in rows}


BENCHMARKS = _spec_table()
CLASSICAL_IDS = tuple(BENCHMARKS)


def _lookup(id: str) -> BenchmarkSpec:
    try:
        return BENCHMARKS[id.upper()]
    except KeyError:
        raise ConfigError(f"unknown benchmark id {id!r}; expected F1..F23") from None


def make_benchmark(id: str) -> Problem:
    spec = _lookup(id)
    return Problem(spec.id, spec.bounds, spec.func, noisy=spec.noisy)


def benchmark_optimum(id: str) -> tuple[Optional[np.ndarray], float]:
    spec = _lookup(id)
    pos = None if spec.optimum is None else spec.optimum.copy()
    return pos, spec.f_min
