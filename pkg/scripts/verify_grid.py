#!/usr/bin/env python3
"""Exhaustively verify constructed plans over a grid of configurations.

For every (n1, n2, nE) with n2 < n1 the script builds the allocation,
enumerates all message/jam states and reports leakage, decoding errors
and whether the plan realizes the closed-form rate.

    python3 scripts/verify_grid.py --max-n1 9 --max-ne 9
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from macwiretap.core import normalize_config
from macwiretap.scheme import build_allocation
from macwiretap.verify import DEFAULT_BUDGET_BITS, verify_config


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n1", type=int, default=9)
    parser.add_argument("--max-ne", type=int, default=9)
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET_BITS,
                        help="enumeration budget in state bits")
    args = parser.parse_args()

    start = time.perf_counter()
    total = skipped = insecure = erroneous = mismatched = 0
    for n1 in range(2, args.max_n1 + 1):
        for n2 in range(1, n1):
            for ne in range(1, args.max_ne + 1):
                cfg = normalize_config(n1, n2, ne, ne)
                plan = build_allocation(cfg)
                bits = plan.m1 + plan.m2 + plan.j1 + plan.j2
                if bits > args.budget:
                    skipped += 1
                    print(f"n1={n1} n2={n2} nE={ne}: skipped ({bits} state bits)")
                    continue
                rep = verify_config(cfg, budget_bits=args.budget)
                total += 1
                flags = []
                if rep.leakage != 0:
                    insecure += 1
                    flags.append(f"LEAKS {rep.leakage}")
                if rep.error_probability != 0:
                    erroneous += 1
                    flags.append(f"ERRORS {rep.error_probability}")
                if not rep.formula_match:
                    mismatched += 1
                    flags.append("FORMULA MISMATCH")
                if flags:
                    print(f"n1={n1} n2={n2} nE={ne}: {', '.join(flags)}")
    elapsed = time.perf_counter() - start
    print(
        f"verified {total} configs in {elapsed:.1f}s: "
        f"{insecure} leaking, {erroneous} erroneous, {mismatched} formula "
        f"mismatches, {skipped} skipped for budget"
    )
    return 1 if (insecure or erroneous or mismatched) else 0


if __name__ == "__main__":
    sys.exit(main())
