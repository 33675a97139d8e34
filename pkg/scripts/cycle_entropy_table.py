#!/usr/bin/env python3
"""Cycle entropy against its lower bounds for a range of n, as CSV on stdout."""

import argparse
import csv
import sys

from dicentropy.entropy_bounds import check_cycle, theorem2_bound

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--n-min", type=int, default=3)
ap.add_argument("--n-max", type=int, default=64)
args = ap.parse_args()

w = csv.writer(sys.stdout, lineterminator="\n")
w.writerow(("n", "entropy", "binomial_minus_one_bound", "cycle_bound", "upper_bound", "slack_lower", "slack_upper"))
for n in range(args.n_min, args.n_max + 1):
    c = check_cycle(n)
    up = theorem2_bound(n)
    w.writerow((n, f"{c.entropy:.9f}", f"{c.binomial_minus_one_bound:.9f}", f"{c.lower_bound:.9f}", f"{up:.9f}",
                f"{c.entropy - c.lower_bound:.9f}", f"{up - c.entropy:.9f}"))
