"""Run the 30-run protocol on a suite and print mFOX means next to reference values.

    python scripts/run_protocol.py --suite classical --out results/classical
    python scripts/run_protocol.py --suite engineering --out results/engineering
"""
import argparse
import logging

from foxopt.harness import ExperimentConfig, resolve_suite, run_experiment

# literature mFOX mean (classical) or best-of-30 (engineering) values
REFERENCE = {
    "F1": 0.0, "F2": 0.0, "F3": 0.0, "F4": 0.0, "F5": 27.9, "F6": 3.56e-6, "F7": 1.38e-4,
    "F8": -7570.0, "F9": 0.0, "F10": 8.88e-16, "F11": 0.0, "F12": 4.72e-7, "F13": 4.43e-2,
    "F14": 1.40, "F15": 3.08e-4, "F16": -1.03, "F17": 0.398, "F18": 3.0, "F19": -3.86,
    "F20": -3.32, "F21": -10.2, "F22": -10.4, "F23": -10.5,
    "spring": 0.012666, "vessel": 5885.432, "compressor": 2964901.0, "bearing": 1637.581,
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--suite", default="classical")
    ap.add_argument("--runs", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--out", default="results/protocol")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    cfg = ExperimentConfig(problems=resolve_suite(args.suite), runs=args.runs, base_seed=args.seed,
                           parallel=args.parallel, output_dir=args.out)
    bundle = run_experiment(cfg)
    print(f"{'problem':<11}{'mFOX mean':>12}{'mFOX best':>12}{'FOX mean':>12}{'p':>10}{'reference':>12}")
    for pid in bundle.problems:
        m, f = bundle.cell(pid, "mfox"), bundle.cell(pid, "fox")
        print(f"{pid:<11}{m.summary.avg:>12.4g}{m.summary.best:>12.4g}{f.summary.avg:>12.4g}"
              f"{m.p_values['fox']:>10.2g}{REFERENCE.get(pid, float('nan')):>12.4g}")


if __name__ == "__main__":
    main()
