"""Compare uniform and standard-normal walk steps for both optimizers.

Uniform steps on [0, 1) only ever push the walk in the positive direction,
which stalls on optima away from the walk's drift (F6, F12). The reference
columns are literature means.

    python scripts/step_noise_study.py --runs 8
"""
import argparse

import numpy as np

from foxopt.benchmarks import make_benchmark
from foxopt.core import RunConfig
from foxopt.fox import FoxParams, fox_run
from foxopt.mfox import MfoxParams, mfox_run

PROBLEMS = ["F5", "F6", "F12", "F16", "F21"]
REFERENCE = {"mfox": {"F5": 27.9, "F6": 3.56e-6, "F12": 4.72e-7, "F16": -1.03, "F21": -10.2},
             "fox": {"F5": 28.8, "F6": 2.85e-3, "F12": 6.23e-5, "F16": -1.00, "F21": -5.23}}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--runs", type=int, default=8)
    args = ap.parse_args()
    setups = [("mfox", mfox_run, MfoxParams), ("fox", fox_run, FoxParams)]
    print(f"{'algo':<6}{'steps':<9}" + "".join(f"{p:>12}" for p in PROBLEMS))
    for name, runner, params in setups:
        for noise in ("uniform", "normal"):
            row = []
            for pid in PROBLEMS:
                prob = make_benchmark(pid)
                vals = [runner(prob, RunConfig(seed=s), params(step_noise=noise)).best_fitness
                        for s in range(args.runs)]
                row.append(np.mean(vals))
            print(f"{name:<6}{noise:<9}" + "".join(f"{v:>12.3g}" for v in row), flush=True)
        print(f"{name:<6}{'ref':<9}" + "".join(f"{REFERENCE[name][p]:>12.3g}" for p in PROBLEMS))


if __name__ == "__main__":
    main()
