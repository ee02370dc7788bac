"""Max / mean packing size over repeated randomized runs vs the lower bound.

    python scripts/lower_bound_trials.py --trials 100 --seed 1 --workers 4
"""
import argparse
import math

from limpack.experiments import run_trials, lower_bound_suite
from limpack.packing import PackingInstance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'instance':<44} {'k':>3} {'bound':>8} {'ceil':>5} {'max':>5} {'mean':>8} {'min':>5}")
    short = 0
    for label, g, k in lower_bound_suite(args.seed):
        s = run_trials(PackingInstance(g, k), args.trials, args.seed, args.workers)
        need = math.ceil(s.lower_bound)
        short += s.max < need
        print(f"{label:<44} {k:>3} {s.lower_bound:>8.3f} {need:>5} {s.max:>5} {s.mean:>8.2f} {s.min:>5}")
    print(f"instances below the bound: {short}")


if __name__ == "__main__":
    main()
