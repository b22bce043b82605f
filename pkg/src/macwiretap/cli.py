"""Command-line front end: rate queries, grid sweeps, curve data, verification.

Subcommands
-----------
rate    print the rate report for one configuration (text or JSON)
sweep   evaluate a grid of configurations into a CSV file
fig3    normalized rate curves over the gain ratio alpha = n2/n1
verify  exhaustively verify one configuration's plan, JSON report

Exit codes: 0 success, 1 I/O error, 2 usage error or singular
configuration (verify), 3 leakage detected, 4 decode failure,
5 formula mismatch, 6 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .core import SingularChannelError, normalize_config
from .rates import RateReport, rate_report
from .verify import DEFAULT_BUDGET_BITS, EnumerationBudgetError, verify_config

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_LEAKAGE = 3
EXIT_DECODE = 4
EXIT_FORMULA = 5
EXIT_BUDGET = 6

CSV_COLUMNS = [
    "n11", "n21", "n22", "n12", "n1", "n2", "nE", "n_delta", "regime",
    "alpha", "r_ach", "r_ub", "r_ach_norm", "r_ub_norm", "red_curve_norm",
    "alpha_dec", "r_ub_dec", "r_ach_norm_dec", "r_ub_norm_dec", "red_curve_norm_dec",
]


@dataclass
class SweepSpec:
    """Ranges and options driving a sweep or curve run."""

    n11: list[int] = field(default_factory=lambda: [0])
    n21: list[int] = field(default_factory=lambda: [0])
    n22: list[int] = field(default_factory=lambda: [0])
    n12: list[int] = field(default_factory=lambda: [0])
    tie_ne: Optional[str] = None        # "n1" | "n2" | "nmax": override n22=n12
    strict_order: bool = False          # keep only rows with n21 < n11
    n1_fixed: int = 60                  # curve mode: fixed strong-user gain
    alphas: Optional[list[Fraction]] = None
    ne_value: Optional[int] = None      # curve mode: explicit eavesdropper gain
    out: str = "-"
    budget_bits: int = DEFAULT_BUDGET_BITS


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def parse_range(text: str) -> list[int]:
    """Parse '7', '1:10' (inclusive) or '1,2,5' into a list of ints."""
    text = text.strip()
    try:
        if ":" in text:
            lo, hi = text.split(":")
            lo_i, hi_i = int(lo), int(hi)
            if lo_i < 0 or hi_i < lo_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        if "," in text:
            values = [int(part) for part in text.split(",") if part.strip() != ""]
            if not values or any(v < 0 for v in values):
                raise ValueError
            return values
        value = int(text)
        if value < 0:
            raise ValueError
        return [value]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad range {text!r}: use N, LO:HI or a comma list of non-negative ints"
        )


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _frac_str(x: Optional[Fraction]) -> str:
    return "" if x is None else str(x)


def _frac_dec(x: Optional[Fraction]) -> str:
    return "" if x is None else f"{float(x):.6f}"


def report_csv_row(report: RateReport) -> dict[str, str]:
    cfg = report.cfg
    return {
        "n11": str(cfg.n11),
        "n21": str(cfg.n21),
        "n22": str(cfg.n22),
        "n12": str(cfg.n12),
        "n1": str(cfg.n1),
        "n2": str(cfg.n2),
        "nE": str(cfg.n_e),
        "n_delta": str(cfg.n_delta),
        "regime": cfg.regime.value,
        "alpha": _frac_str(report.alpha),
        "r_ach": str(report.r_ach),
        "r_ub": _frac_str(report.r_ub),
        "r_ach_norm": _frac_str(report.r_ach_norm),
        "r_ub_norm": _frac_str(report.r_ub_norm),
        "red_curve_norm": _frac_str(report.red_curve_norm),
        "alpha_dec": _frac_dec(report.alpha),
        "r_ub_dec": _frac_dec(report.r_ub),
        "r_ach_norm_dec": _frac_dec(report.r_ach_norm),
        "r_ub_norm_dec": _frac_dec(report.r_ub_norm),
        "red_curve_norm_dec": _frac_dec(report.red_curve_norm),
    }


def sweep_rows(spec: SweepSpec) -> list[dict[str, str]]:
    """Rate-report rows for the grid, in lexicographic input order."""
    rows = []
    for n11 in sorted(set(spec.n11)):
        for n21 in sorted(set(spec.n21)):
            if spec.strict_order and not n21 < n11:
                continue
            if spec.tie_ne is not None:
                tied = {
                    "n1": n11, "n2": n21, "nmax": max(n11, n21),
                }[spec.tie_ne]
                pairs = [(tied, tied)]
            else:
                pairs = [
                    (n22, n12)
                    for n22 in sorted(set(spec.n22))
                    for n12 in sorted(set(spec.n12))
                ]
            for n22, n12 in pairs:
                rows.append(report_csv_row(rate_report(normalize_config(n11, n21, n22, n12))))
    return rows


def curve_rows(spec: SweepSpec) -> tuple[list[dict[str, str]], list[str]]:
    """Rows for the normalized rate curves over the ratio grid.

    The eavesdropper follows the explicit ``ne_value`` if given, else
    the default rule n_e = n_max, which keeps the eavesdropper above
    the weak user for every ratio so the private rate stays zero.
    Ratios that do not yield an integer weak-user gain are skipped with
    a warning.
    """
    n1 = spec.n1_fixed
    alphas = spec.alphas
    if alphas is None:
        alphas = [Fraction(k, n1) for k in range(0, 2 * n1 + 1)]
    rows, warnings = [], []
    for alpha in sorted(set(alphas)):
        n2_exact = alpha * n1
        if n2_exact.denominator != 1 or n2_exact < 0:
            warnings.append(f"skipping alpha={alpha}: n2 = alpha*{n1} is not a whole level count")
            continue
        n2 = int(n2_exact)
        ne = spec.ne_value if spec.ne_value is not None else max(n1, n2)
        rows.append(report_csv_row(rate_report(normalize_config(n1, n2, ne, ne))))
    return rows, warnings


def write_csv(rows: list[dict[str, str]], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _rate_text(report: RateReport) -> str:
    cfg = report.cfg
    lines = [
        f"gains: n11={cfg.n11} n21={cfg.n21} n22={cfg.n22} n12={cfg.n12}"
        + (" (users swapped)" if cfg.swapped else ""),
        f"derived: n1={cfg.n1} n2={cfg.n2} nE={cfg.n_e} n_delta={cfg.n_delta} "
        f"q={cfg.q} n_c={cfg.n_c} n_p={cfg.n_p} regime={cfg.regime.value}",
        f"r_ach = {report.r_ach}",
        f"r_ub  = {report.r_ub} ({_frac_dec(report.r_ub)})",
        f"alpha = {_frac_str(report.alpha) or 'undefined'}",
        f"r_ach_norm = {report.r_ach_norm} ({_frac_dec(report.r_ach_norm)})",
        f"r_ub_norm  = {report.r_ub_norm} ({_frac_dec(report.r_ub_norm)})",
        f"red_curve_norm = {report.red_curve_norm} ({_frac_dec(report.red_curve_norm)})",
    ]
    return "\n".join(lines)


def _load_spec_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("spec file must hold a JSON object")
    return data


def _spec_ranges(data: dict, key: str) -> Optional[list[int]]:
    if key not in data:
        return None
    value = data[key]
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        return parse_range(value)
    if isinstance(value, list):
        return [int(v) for v in value]
    raise ValueError(f"spec key {key!r} must be an int, range string or list")


def _gains_from_args(args) -> tuple[int, int, int, int]:
    spec_data = _load_spec_file(args.spec) if getattr(args, "spec", None) else {}
    gains = []
    for key in ("n11", "n21", "n22", "n12"):
        flag = getattr(args, key, None)
        if flag is not None:
            gains.append(flag)
        elif key in spec_data:
            gains.append(int(spec_data[key]))
        else:
            raise SystemExit(
                f"error: missing {key} (pass --{key} or provide it in --spec)"
            )
    return tuple(gains)


def cmd_rate(args) -> int:
    gains = _gains_from_args(args)
    report = rate_report(normalize_config(*gains))
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(_rate_text(report))
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec_data = _load_spec_file(args.spec) if args.spec else {}
    spec = SweepSpec()
    for key in ("n11", "n21", "n22", "n12"):
        from_file = _spec_ranges(spec_data, key)
        flag = getattr(args, key)
        if flag is not None:
            setattr(spec, key, flag)
        elif from_file is not None:
            setattr(spec, key, from_file)
    spec.tie_ne = args.tie_ne if args.tie_ne else spec_data.get("tie_ne")
    spec.strict_order = args.strict_order or bool(spec_data.get("strict_order"))
    spec.out = args.out if args.out is not None else spec_data.get("out", "-")
    rows = sweep_rows(spec)
    try:
        out, close = _open_out(spec.out)
        try:
            write_csv(rows, out)
        finally:
            if close:
                out.close()
    except OSError as exc:
        print(f"error: cannot write {spec.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_fig3(args) -> int:
    spec_data = _load_spec_file(args.spec) if args.spec else {}
    spec = SweepSpec()
    spec.n1_fixed = args.n1 if args.n1 is not None else int(spec_data.get("n1_fixed", 60))
    if spec.n1_fixed < 2:
        print("error: --n1 must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if args.alphas is not None:
        spec.alphas = args.alphas
    elif "alphas" in spec_data:
        spec.alphas = [parse_fraction(str(a)) for a in spec_data["alphas"]]
    spec.ne_value = args.ne if args.ne is not None else spec_data.get("ne")
    spec.out = args.out if args.out is not None else spec_data.get("out", "-")
    rows, warnings = curve_rows(spec)
    for message in warnings:
        print(f"warning: {message}", file=sys.stderr)
    try:
        out, close = _open_out(spec.out)
        try:
            write_csv(rows, out)
        finally:
            if close:
                out.close()
    except OSError as exc:
        print(f"error: cannot write {spec.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def report_exit_code(leak: Fraction, err: Fraction, formula_match: bool) -> int:
    """Map verification outcomes to the documented exit codes."""
    if leak != 0:
        return EXIT_LEAKAGE
    if err != 0:
        return EXIT_DECODE
    if not formula_match:
        return EXIT_FORMULA
    return EXIT_OK


def cmd_verify(args) -> int:
    gains = _gains_from_args(args)
    spec_data = _load_spec_file(args.spec) if args.spec else {}
    budget = args.budget if args.budget is not None else int(
        spec_data.get("budget", DEFAULT_BUDGET_BITS)
    )
    try:
        report = verify_config(normalize_config(*gains), budget_bits=budget)
    except SingularChannelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(json.dumps(report.to_json_dict(), indent=2))
    return report_exit_code(report.leakage, report.error_probability, report.formula_match)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macwt",
        description="Deterministic bit-level two-user uplink with an eavesdropper: "
        "secrecy rates, jamming-aligned allocations, exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gain_flags(p, as_range: bool):
        kind = parse_range if as_range else _nonneg_int
        for key in ("n11", "n21", "n22", "n12"):
            p.add_argument(f"--{key}", type=kind, default=None)
        p.add_argument("--spec", help="JSON file with defaults for any flag")

    p_rate = sub.add_parser("rate", help="rates for one configuration")
    add_gain_flags(p_rate, as_range=False)
    p_rate.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p_rate.set_defaults(func=cmd_rate)

    p_sweep = sub.add_parser("sweep", help="rate grid to CSV")
    add_gain_flags(p_sweep, as_range=True)
    p_sweep.add_argument(
        "--tie-ne", choices=("n1", "n2", "nmax"), default=None,
        help="set both eavesdropper gains to the chosen receiver gain",
    )
    p_sweep.add_argument(
        "--strict-order", action="store_true",
        help="keep only rows with n21 < n11",
    )
    p_sweep.add_argument("--out", default=None, help="output CSV path ('-' = stdout)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_fig3 = sub.add_parser(
        "fig3", help="normalized rate curves over the gain ratio alpha"
    )
    p_fig3.add_argument("--n1", type=_nonneg_int, default=None, help="fixed strong-user gain")
    p_fig3.add_argument(
        "--alphas", type=lambda s: [parse_fraction(p) for p in s.split(",")],
        default=None, help="comma list of rational ratios (default k/n1, k=0..2*n1)",
    )
    p_fig3.add_argument(
        "--ne", type=_nonneg_int, default=None,
        help="explicit eavesdropper gain (default: n_max per row)",
    )
    p_fig3.add_argument("--out", default=None, help="output CSV path ('-' = stdout)")
    p_fig3.add_argument("--spec", help="JSON file with defaults for any flag")
    p_fig3.set_defaults(func=cmd_fig3)

    p_verify = sub.add_parser("verify", help="exhaustive verification of one configuration")
    add_gain_flags(p_verify, as_range=False)
    p_verify.add_argument(
        "--budget", type=_nonneg_int, default=None,
        help=f"enumeration budget in state bits (default {DEFAULT_BUDGET_BITS})",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        if isinstance(code, int):
            return code
        print(str(code), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
