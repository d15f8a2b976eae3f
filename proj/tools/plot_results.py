#!/usr/bin/env python3
# Copyright 2026 The cutrank Authors
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

"""Renders PNG figures from the CSV tables written by `cutrank experiment` and
`cutrank bench`. Any table that is missing is skipped.

    python3 tools/plot_results.py results/ [--bench bench.csv] [--out figures/]
"""

import argparse
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


def load(path):
    path = pathlib.Path(path)
    if not path.exists():
        return None
    return pd.read_csv(path)


def plot_bench(df, out):
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for backend, rows in df.groupby("backend"):
        ax.plot(rows["vertices"], rows["median_ms"], marker="o", label=backend)
    ax.set_yscale("log")
    ax.set_xlabel("vertices")
    ax.set_ylabel("median anneal time [ms]")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / "bench.png", dpi=150)


def plot_grid(df, out):
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(df["n"], df["mean_deviation"], marker="o")
    ax.set_xlabel("grid side n")
    ax.set_ylabel("mean best rank - n")
    fig.tight_layout()
    fig.savefig(out / "grid_sweep.png", dpi=150)


def plot_sparse(df, out):
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.5))
    for (c, p1), rows in df.groupby(["c", "p1"]):
        label = f"c={c:g}, P1={p1:g}"
        left.plot(rows["n"], rows["mean_anneal_ms"], marker="o", label=label)
        right.plot(rows["n"], rows["mean_best_rank"], marker="o", label=label)
    left.set_xlabel("n")
    left.set_ylabel("mean anneal time [ms]")
    right.set_xlabel("n")
    right.set_ylabel("mean best rank")
    right.legend()
    fig.tight_layout()
    fig.savefig(out / "sparse_sweep.png", dpi=150)


def plot_qaoa(df, out):
    df = df[df["family"] == "qaoa-random"]
    if df.empty:
        return
    localities = sorted(df["locality"].unique())
    fig, axes = plt.subplots(1, len(localities), figsize=(4.5 * len(localities), 3.5), squeeze=False)
    for ax, loc in zip(axes[0], localities):
        sub = df[df["locality"] == loc]
        for schedule, rows in sub.groupby("schedule"):
            ax.plot(rows["terms"], rows["mean_best_rank"], marker="o", label=schedule)
        ax.axhline(sub["qubits"].iloc[0], color="grey", linestyle="--", linewidth=1)
        ax.set_title(f"{loc}-local terms")
        ax.set_xlabel("terms")
        ax.set_ylabel("mean best rank")
        ax.legend()
    fig.tight_layout()
    fig.savefig(out / "qaoa_sweep.png", dpi=150)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("results", nargs="?", default="results", help="experiment output directory")
    parser.add_argument("--bench", help="CSV written by `cutrank bench`")
    parser.add_argument("--out", default="figures", help="where to write PNG files")
    args = parser.parse_args()

    results = pathlib.Path(args.results)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    plots = [
        (results / "grid-sweep_summary.csv", plot_grid),
        (results / "sparse-sweep_summary.csv", plot_sparse),
        (results / "qaoa-sweep_summary.csv", plot_qaoa),
    ]
    if args.bench:
        plots.append((pathlib.Path(args.bench), plot_bench))
    for path, fn in plots:
        df = load(path)
        if df is None:
            print(f"skip {path} (missing)")
            continue
        fn(df, out)
        print(f"plotted {path}")


if __name__ == "__main__":
    main()
