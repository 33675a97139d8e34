#!/usr/bin/env python3
"""Run every report-only check and write one CSV per check.

    python scripts/report_checks.py --out results/

Writes cited_binomial_bound.csv, cycle_vs_all.csv, conjecture1.csv and
circular_r<r>.csv. Nothing here asserts; rows carry the verdicts.
"""

import argparse
import csv
from pathlib import Path

from dicentropy.entropy_bounds import check_cited_binomial_bound
from dicentropy.search import check_circular_conjecture, check_conjecture1, compare_cycle_vs_all


def write(path, columns, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--max-trials", type=int, default=32)
    ap.add_argument("--cycle-n", type=int, nargs="+", default=[3, 4, 5, 6, 7])
    ap.add_argument("--circular-r", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--circular-n-max", type=int, default=16)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    rows = []
    for t in range(1, args.max_trials + 1):
        c = check_cited_binomial_bound(t)
        rows.append((t, f"{c.exact_entropy:.9f}", f"{c.bound:.9f}", f"{c.slack:.9f}", c.holds))
    write(out / "cited_binomial_bound.csv", ("trials", "exact_entropy", "bound", "slack", "holds"), rows)

    rows = []
    for n in args.cycle_n:
        cmp = compare_cycle_vs_all(n, workers=args.workers)
        refs = cmp.reference_entropies
        rows.append((n, f"{cmp.cycle_entropy:.9f}", f"{refs.get('double-edges', float('nan')):.9f}",
                     f"{refs['star-plus-edge']:.9f}", f"{cmp.max_entropy:.9f}", " ".join(cmp.maximizers),
                     cmp.verdict))
    write(out / "cycle_vs_all.csv",
          ("n", "cycle", "double_edges", "star_plus_edge", "class_max", "maximizers", "verdict"), rows)

    rows = []
    for n, m, r in [(3, 3, 2), (4, 4, 2), (5, 5, 2), (6, 6, 2), (4, 5, 2), (5, 6, 2),
                    (4, 4, 3), (5, 5, 3), (6, 6, 3), (5, 5, 4)]:
        rep = check_conjecture1(n, m, r, up_to_iso=n > 5, workers=args.workers)
        rows.append((n, m, r, rep.candidates_evaluated, f"{rep.max_entropy:.9f}", " ".join(rep.maximizers),
                     " ".join(map(str, rep.maximizer_degree_gaps)), rep.conjecture1_verdict))
    write(out / "conjecture1.csv",
          ("n", "m", "r", "candidates", "max_entropy", "maximizers", "degree_gaps", "verdict"), rows)

    for r in args.circular_r:
        table = check_circular_conjecture(r, r + 1, args.circular_n_max)
        rows = [(row.n, "" if row.skipped else f"{row.entropy:.9f}", f"{row.half_log_n_over_r:.9f}",
                 "" if row.skipped else f"{row.residual:.9f}", row.skipped) for row in table.rows]
        write(out / f"circular_r{r}.csv", ("n", "entropy", "half_log_n_over_r", "residual", "skipped"), rows)


if __name__ == "__main__":
    main()
