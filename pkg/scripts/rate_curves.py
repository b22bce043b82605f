#!/usr/bin/env python3
"""Generate the normalized secrecy-rate curves and optionally plot them.

Writes the same CSV as ``macwt fig3`` and, when matplotlib is
installed, renders the achievable curve, the converse bound and the
two-thirds-of-mean-gain reference into a PNG next to the CSV.

    python3 scripts/rate_curves.py --n1 60 --out curves.csv --png curves.png
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from macwiretap.cli import SweepSpec, curve_rows, write_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n1", type=int, default=60, help="fixed strong-user gain")
    parser.add_argument("--ne", type=int, default=None,
                        help="explicit eavesdropper gain (default n_max per row)")
    parser.add_argument("--out", default="rate_curves.csv")
    parser.add_argument("--png", default=None, help="optional plot output path")
    args = parser.parse_args()

    spec = SweepSpec(n1_fixed=args.n1, ne_value=args.ne)
    rows, warnings = curve_rows(spec)
    for message in warnings:
        print(f"warning: {message}", file=sys.stderr)

    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh)
    print(f"wrote {len(rows)} rows to {args.out}")

    if args.png:
        try:
            import matplotlib

            matplotlib.use("Agg")
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib not installed, skipping the plot", file=sys.stderr)
            return 0
        alphas = [float(Fraction(r["alpha"])) for r in rows]
        ach = [float(Fraction(r["r_ach_norm"])) for r in rows]
        ub = [float(Fraction(r["r_ub_norm"])) for r in rows]
        red = [float(Fraction(r["red_curve_norm"])) for r in rows]
        fig, ax = plt.subplots(figsize=(8, 5))
        ax.plot(alphas, ach, color="tab:blue", label="achievable (normalized)")
        ax.plot(alphas, ub, color="tab:green", label="upper bound (normalized)")
        ax.plot(alphas, red, color="tab:red", linestyle="--",
                label="2/3 of mean gain (normalized)")
        ax.axhline(2 / 3, color="gray", linewidth=0.5)
        ax.set_xlabel("alpha = n2 / n1")
        ax.set_ylabel("secure bits per strongest-gain level")
        ax.set_title(f"Normalized secrecy sum-rate, n1 = {args.n1}, eavesdropper at n_max")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.png, dpi=150)
        print(f"wrote plot to {args.png}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
