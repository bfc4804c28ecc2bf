#!/usr/bin/env python3
"""Render a sweep CSV produced by `starnoma op-sweep` / `starnoma ec-sweep`.

The CSV layout is one row per grid point: the sweep axis and element split
first, then an outage block and/or a rate block depending on which command
produced the file. Closed-form columns are drawn as lines, Monte-Carlo
columns as points with 3-sigma error bars. Quarantined rows (NaN metrics)
are skipped automatically by matplotlib.

Usage:
    plot_csv.py result.csv [-o plot.png] [--log-op] [--title TEXT]
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field


@dataclass
class Sweep:
    axis: str
    columns: dict[str, list[float]] = field(default_factory=dict)

    def has(self, *names: str) -> bool:
        return all(n in self.columns for n in names)


def read_sweep(path: str) -> Sweep:
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if not reader.fieldnames:
            raise SystemExit(f"{path}: empty file")
        sweep = Sweep(axis=reader.fieldnames[0])
        for name in reader.fieldnames:
            sweep.columns[name] = []
        for row in reader:
            for name in reader.fieldnames:
                text = (row[name] or "nan").strip()
                try:
                    value = float(text)
                except ValueError:
                    value = math.nan
                sweep.columns[name].append(value)
        return sweep


def plot_block(ax, sweep: Sweep, block: str, log_scale: bool) -> None:
    x = sweep.columns[sweep.axis]
    styles = {"i": ("tab:blue", "indoor"), "o": ("tab:red", "outdoor")}
    for user, (color, label) in styles.items():
        ana, mc, se = f"{block}_{user}_ana", f"{block}_{user}_mc", f"{block}_{user}_se"
        if sweep.has(ana):
            ax.plot(x, sweep.columns[ana], color=color, label=f"{label} (closed form)")
        if sweep.has(mc, se):
            bars = [3.0 * s for s in sweep.columns[se]]
            ax.errorbar(x, sweep.columns[mc], yerr=bars, fmt="o", ms=4, color=color,
                        mfc="white", capsize=2, lw=0, elinewidth=1,
                        label=f"{label} (Monte Carlo)")
    if block == "ec" and sweep.has("sum_rate_ana"):
        ax.plot(x, sweep.columns["sum_rate_ana"], color="tab:green", ls="--",
                label="sum rate (closed form)")
    if block == "ec" and sweep.has("sum_rate_mc"):
        ax.plot(x, sweep.columns["sum_rate_mc"], "s", ms=4, color="tab:green",
                mfc="white", label="sum rate (Monte Carlo)")
    if log_scale:
        ax.set_yscale("log")
    ax.set_xlabel(sweep.axis)
    ax.set_ylabel("outage probability" if block == "op" else "rate (bits/channel use)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv_path", help="sweep CSV to render")
    parser.add_argument("-o", "--out", help="output image (default: show interactively)")
    parser.add_argument("--log-op", action="store_true",
                        help="log scale for the outage panel")
    parser.add_argument("--title", default=None, help="figure title")
    args = parser.parse_args()

    try:
        import matplotlib
        if args.out:
            matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as error:
        raise SystemExit(f"matplotlib is required: {error}")

    sweep = read_sweep(args.csv_path)
    blocks = [b for b in ("op", "ec") if sweep.has(f"{b}_i_ana")]
    if not blocks:
        raise SystemExit(f"{args.csv_path}: no metric columns found")

    fig, axes = plt.subplots(1, len(blocks), figsize=(6.0 * len(blocks), 4.2))
    if len(blocks) == 1:
        axes = [axes]
    for ax, block in zip(axes, blocks):
        plot_block(ax, sweep, block, log_scale=args.log_op and block == "op")
    fig.suptitle(args.title or args.csv_path)
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
        print(f"wrote {args.out}")
    else:
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main())
