#!/usr/bin/env python3
# Copyright 2026 The cs832 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Plots sweep CSVs written by `cs832` or the acceptance binary.

    python3 tools/plot_sweep.py out/switch_1to2_ppp.csv out/prep_v1_ppp.csv -o sweep.png

The left panel shows p_L with 95% intervals on log axes and a p^2 guide,
the right panel the acceptance rate R.
"""

import argparse
import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_rows(path):
    with open(path, newline="") as f:
        return [{k: float(v) for k, v in row.items()} for row in csv.DictReader(f)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", nargs="+", type=pathlib.Path)
    parser.add_argument("-o", "--output", type=pathlib.Path, default=pathlib.Path("sweep.png"))
    args = parser.parse_args()

    fig, (ax_pl, ax_r) = plt.subplots(1, 2, figsize=(11, 4.5))
    all_p = []
    for path in args.csv:
        rows = [r for r in read_rows(path) if r["p"] > 0]
        if not rows:
            continue
        p = [r["p"] for r in rows]
        all_p += p
        label = path.stem
        with_failures = [r for r in rows if r["n_failure"] > 0]
        if with_failures:
            ax_pl.errorbar(
                [r["p"] for r in with_failures],
                [r["p_L"] for r in with_failures],
                yerr=[
                    [r["p_L"] - r["p_L_ci_lo"] for r in with_failures],
                    [r["p_L_ci_hi"] - r["p_L"] for r in with_failures],
                ],
                marker="o",
                capsize=3,
                label=label,
            )
        ax_r.errorbar(
            p,
            [r["R"] for r in rows],
            yerr=[[r["R"] - r["R_ci_lo"] for r in rows], [r["R_ci_hi"] - r["R"] for r in rows]],
            marker="o",
            capsize=3,
            label=label,
        )
    if all_p:
        lo, hi = min(all_p), max(all_p)
        ax_pl.plot([lo, hi], [lo * lo, hi * hi], "k--", linewidth=1, label="p^2")
    ax_pl.set(xscale="log", yscale="log", xlabel="physical error rate p", ylabel="logical error rate p_L")
    ax_r.set(xscale="log", xlabel="physical error rate p", ylabel="acceptance rate R")
    for ax in (ax_pl, ax_r):
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
