"""Descriptive statistics, competition ranking and the Wilcoxon rank-sum test."""
from __future__ import annotations

import math
import warnings
from typing import NamedTuple, Sequence

import numpy as np

# p-value cell used when both samples contain one and the same value
IDENTICAL = math.nan

EXACT_MAX_TOTAL = 16


class Summary(NamedTuple):
    avg: float
    std: float
    best: float
    worst: float


def summarize(sample: Sequence[float]) -> Summary:
    x = np.asarray(sample, dtype=float)
    if x.size == 0:
        raise ValueError("cannot summarize an empty sample")
    std = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
    return Summary(float(np.mean(x)), std, float(np.min(x)), float(np.max(x)))


def tied_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks with ties sharing the average of their positions."""
    x = np.asarray(values, dtype=float)
    order = np.argsort(x, kind="mergesort")
    ranks = np.empty(x.size)
    sx = x[order]
    start = 0
    for end in range(1, x.size + 1):
        if end == x.size or sx[end] != sx[start]:
            ranks[order[start:end]] = (start + end + 1) / 2.0
            start = end
    return ranks


def competition_rank(means: Sequence[float], method: str = "min") -> list:
    """Rank ascending means, 1 = smallest.

    ``method="min"`` gives standard competition ranking (1224): tied entries
    share the lowest rank of their group. ``method="average"`` gives
    fractional tied ranks instead. NaN entries are placed last and trigger a
    ``RuntimeWarning``.
    """
    x = np.asarray(means, dtype=float)
    if x.size == 0:
        raise ValueError("cannot rank an empty list")
    if method not in ("min", "average"):
        raise ValueError(f"unknown ranking method {method!r}")
    nan = np.isnan(x)
    if nan.any():
        warnings.warn(f"{int(nan.sum())} NaN mean(s) ranked last", RuntimeWarning, stacklevel=2)
    finite = x[~nan]
    out = np.empty(x.size)
    if method == "min":
        out[~nan] = [np.count_nonzero(finite < v) + 1 for v in finite]
        out[nan] = finite.size + 1
        return [int(r) for r in out]
    out[~nan] = tied_ranks(finite)
    out[nan] = finite.size + (1 + nan.sum()) / 2.0
    return [float(r) for r in out]


def _rank_sum_counts(doubled_ranks: np.ndarray, n: int) -> dict[int, int]:
    """Number of size-``n`` subsets achieving each (doubled) rank sum."""
    # counts[k] maps doubled sum -> number of k-subsets
    counts = [dict() for _ in range(n + 1)]
    counts[0][0] = 1
    for r in doubled_ranks:
        for k in range(min(n, len(doubled_ranks)), 0, -1):
            prev = counts[k - 1]
            if not prev:
                continue
            cur = counts[k]
            for s, c in prev.items():
                cur[s + r] = cur.get(s + r, 0) + c
    return counts[n]


def _exact_p(ranks: np.ndarray, n: int, w: float) -> float:
    doubled = np.rint(ranks * 2).astype(int)
    counts = _rank_sum_counts(doubled, n)
    total = sum(counts.values())
    n_all = ranks.size
    mu2 = n * (n_all + 1)  # doubled mean
    dev = abs(round(2 * w) - mu2)
    extreme = sum(c for s, c in counts.items() if abs(s - mu2) >= dev)
    return extreme / total


def _normal_p(ranks: np.ndarray, n: int, m: int, w: float) -> float:
    N = n + m
    mu = n * (N + 1) / 2.0
    _, t = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(t ** 3 - t)) / (N * (N - 1))
    var = n * m / 12.0 * ((N + 1) - tie_term)
    if var <= 0:
        return 1.0
    z = max(abs(w - mu) - 0.5, 0.0) / math.sqrt(var)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def wilcoxon_ranksum(a: Sequence[float], b: Sequence[float], method: str = "auto") -> float:
    """Two-sided Wilcoxon rank-sum (Mann-Whitney) p-value.

    Ties get average ranks. ``method="auto"`` enumerates the exact null
    distribution when ``len(a) + len(b) <= 16`` and otherwise uses the normal
    approximation with tie-corrected variance and continuity correction.
    Returns :data:`IDENTICAL` (NaN) when every value in both samples is equal.
    """
    x = np.asarray(a, dtype=float)
    y = np.asarray(b, dtype=float)
    if x.size == 0 or y.size == 0:
        raise ValueError("both samples must be non-empty")
    pooled = np.concatenate([x, y])
    if np.all(pooled == pooled[0]):
        return IDENTICAL
    ranks = tied_ranks(pooled)
    n, m = x.size, y.size
    w = float(ranks[:n].sum())
    if method == "auto":
        method = "exact" if n + m <= EXACT_MAX_TOTAL else "normal"
    if method == "exact":
        return _exact_p(ranks, n, w)
    if method == "normal":
        return _normal_p(ranks, n, m, w)
    raise ValueError(f"unknown method {method!r}")
