#!/usr/bin/env python3
"""Occupation distribution over Landau levels for one coherent state.

Writes n,p_n rows and reports where the distribution peaks next to the
closed-form prediction.  With --plot also saves a bar chart.
"""
import argparse
import csv

from landau_coherent.magnetic import occupation_probabilities, peak_info


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--l", type=float, default=-9.0,
                        help="angular momentum label (non-positive)")
    parser.add_argument("--n-upper", type=int, default=30)
    parser.add_argument("--out", default="occupation.csv")
    parser.add_argument("--plot", metavar="PNG",
                        help="also save a bar chart to this path")
    args = parser.parse_args()
    if args.l > 0:
        parser.error("--l must be non-positive")

    probs = occupation_probabilities(args.l, args.n_upper)
    info = peak_info(args.l)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "p_n"])
        for n, p in enumerate(probs):
            writer.writerow([n, format(p, ".17g")])
    print(f"wrote {args.out}: {len(probs)} rows for l={args.l}")
    print(f"peak at n={info.n}, predicted {info.predicted}, tie={info.tie}")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.bar(range(len(probs)), probs, color="tab:blue")
        ax.axvline(info.predicted, color="tab:red", linestyle="--",
                   label=f"predicted peak n={info.predicted}")
        ax.set_xlabel("Landau index n")
        ax.set_ylabel("p_n")
        ax.set_title(f"Occupation distribution at l={args.l}")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
