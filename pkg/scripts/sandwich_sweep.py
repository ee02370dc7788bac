"""Exact L_k, gamma_xk and gamma against every closed-form bound on a random corpus.

    python scripts/sandwich_sweep.py --count 500 --seed 3
"""
import argparse
from collections import Counter

from limpack.experiments import named_corpus, random_corpus, sandwich_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    rep = sandwich_sweep(named_corpus() + random_corpus(args.count, args.seed), workers=args.workers)
    gaps = Counter((r.ktuple - r.lk) for r in rep.rows if r.ktuple is not None)
    print(f"instances: {len(rep.rows)}  checked: {rep.checked}  violations: {len(rep.violations)}")
    print("gamma_xk - L_k histogram:", dict(sorted(gaps.items())))
    for v in rep.violations:
        print("VIOLATION", v)


if __name__ == "__main__":
    main()
