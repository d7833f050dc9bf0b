#!/usr/bin/env python3
"""Render panel figures from gastrodose trace CSVs.

Usage:
    plot_traces.py TRACE_CSV [more CSVs...] [-o OUTPUT.png]

Each trace gets a 15-panel grid (the 12 states plus food, PPI level and the
per-day dose bars when an optimization log sits next to the trace).
"""
import argparse
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

COLUMNS = ["Gtn_A", "Gtn_C", "S_A", "S_C", "H_C", "A_C", "A_A",
           "B_C", "B_A", "N_C", "N_E", "PP_n", "Fd", "PPI"]


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return {k: [float(r[k]) for r in rows] for k in rows[0]}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("traces", nargs="+")
    ap.add_argument("-o", "--output", default=None,
                    help="output image (default: <trace>.png)")
    ap.add_argument("--acid-max", type=float, default=0.035,
                    help="ceiling drawn on the A_C panel")
    args = ap.parse_args()

    for path in args.traces:
        data = read_csv(path)
        t = data["time_h"]

        log_path = os.path.join(os.path.dirname(path) or ".", "optimization_log.csv")
        have_log = os.path.exists(log_path)

        n_panels = len(COLUMNS) + (1 if have_log else 0)
        ncols = 3
        nrows = (n_panels + ncols - 1) // ncols
        fig, axes = plt.subplots(nrows, ncols, figsize=(13, 2.2 * nrows), sharex=False)
        axes = axes.ravel()

        for i, col in enumerate(COLUMNS):
            ax = axes[i]
            ax.plot(t, data[col], lw=0.8)
            ax.set_title(col, fontsize=9)
            ax.tick_params(labelsize=7)
            if col == "A_C":
                ax.axhline(args.acid_max, color="red", lw=1.0)

        if have_log:
            log = read_csv(log_path)
            ax = axes[len(COLUMNS)]
            ax.bar(log["dose_time_h"], log["dose_mg"], width=6.0)
            ax.set_title("dose [mg]", fontsize=9)
            ax.tick_params(labelsize=7)

        for ax in axes[n_panels:]:
            ax.axis("off")

        fig.suptitle(os.path.basename(path))
        fig.tight_layout()
        out = args.output or os.path.splitext(path)[0] + ".png"
        fig.savefig(out, dpi=130)
        plt.close(fig)
        print(f"wrote {out}")


if __name__ == "__main__":
    sys.exit(main())
