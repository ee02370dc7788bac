"""(k+1)^(-1/k): how close the lower bound gets to k n / (k+1) when k = Delta.

    python scripts/sharpness_table.py 60
"""
import sys

from limpack.experiments import sharpness_sweep

k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 40
for k, ratio in sharpness_sweep(k_max):
    print(f"{k:4d}  {ratio:.6f}  {'#' * round(50 * ratio)}")
