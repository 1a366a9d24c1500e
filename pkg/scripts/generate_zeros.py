#!/usr/bin/env python3
"""Generate a plain-text table of nontrivial zeta zero ordinates.

Produces the same file layout as the public zero tables (one decimal
literal per line, '#' comments): suitable as input for the CLI and the
test suite. Uses mpmath.zetazero, so expect roughly a second per zero
at the high end of the range. The file is written incrementally and the
script resumes from an interrupted run, so it is safe to stop and restart.

Usage:
    python3 scripts/generate_zeros.py --count 10000 --out data/zeros_10k.txt
"""

import argparse
import os
import sys
import time

import mpmath as mp


def already_done(path):
    """Number of data lines already present in ``path`` (resume support)."""
    if not os.path.exists(path):
        return 0
    n = 0
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                n += 1
    return n


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10000, help="number of zeros to generate")
    ap.add_argument("--out", default="data/zeros_10k.txt", help="output path")
    ap.add_argument("--dps", type=int, default=16, help="mpmath working precision (decimal digits)")
    ap.add_argument("--decimals", type=int, default=12, help="fractional digits written per ordinate")
    args = ap.parse_args()

    mp.mp.dps = args.dps
    start = already_done(args.out)
    mode = "a" if start > 0 else "w"
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)

    with open(args.out, mode, encoding="utf-8", buffering=1) as fh:
        if start == 0:
            fh.write("# Imaginary parts of the first nontrivial zeros of the Riemann zeta function\n")
            fh.write("# one ordinate per line, ordered increasingly\n")
        t_last = time.time()
        for k in range(start + 1, args.count + 1):
            t = mp.zetazero(k).imag
            fh.write(f"{float(t):.{args.decimals}f}\n")
            if k % 100 == 0:
                now = time.time()
                print(f"{k}/{args.count} ({now - t_last:.1f}s per 100)", flush=True)
                t_last = now
    print("done", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
