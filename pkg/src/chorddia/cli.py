"""Command-line front end.

Subcommands: count, table, enumerate, crossings, strict, verify.
Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 resource-cap error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import burnside, classic, closed_forms, oracle
from .errors import DomainError, ResourceLimitError
from .groups import GroupElement, PermGroup, generate_group, make_standard_group
from .svg import render_svg

STANDARD_FORMULAS = {
    "identity": closed_forms.diagram_count,
    "cyclic": closed_forms.cyclic_count,
    "dihedral": closed_forms.dihedral_count,
}


def _require_order(n: int) -> int:
    if n < 1:
        raise DomainError("n must be >= 1")
    return n


def load_group_file(path: str, points_expected: int | None = None) -> PermGroup:
    """Read {"points": 2n, "elements": [[1-based images], ...]} and close it
    under composition."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read group file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"group file {path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "points" not in obj or "elements" not in obj:
        raise DomainError("group file must contain 'points' and 'elements'")
    points = obj["points"]
    if not isinstance(points, int) or points < 2 or points % 2:
        raise DomainError("group file 'points' must be an even integer >= 2")
    if points_expected is not None and points != points_expected:
        raise DomainError(
            f"group file acts on {points} points but n requires {points_expected}"
        )
    elements = []
    for row in obj["elements"]:
        if (
            not isinstance(row, list)
            or not all(isinstance(x, int) for x in row)
            or sorted(row) != list(range(1, points + 1))
        ):
            raise DomainError(f"group file element {row!r} is not a 1-based bijection")
        elements.append(GroupElement.from_images([x - 1 for x in row]))
    return generate_group(elements, points)


def _resolve_group(args, n: int) -> PermGroup:
    if getattr(args, "group_file", None):
        return load_group_file(args.group_file, points_expected=2 * n)
    return make_standard_group(args.group, 2 * n)


# ---------------------------------------------------------------- count

def _cmd_count(args) -> int:
    n = _require_order(args.n)
    # arbitrary groups have no closed form; their default path is burnside
    method = args.method or ("burnside" if args.group_file else "formula")
    if args.group_file and method == "formula":
        raise DomainError("--method formula needs a standard group; use burnside or oracle")
    if method == "formula":
        value = STANDARD_FORMULAS[args.group](n)
    elif method == "burnside":
        value = burnside.burnside_count(n, _resolve_group(args, n))
    else:
        value = oracle.orbit_count(n, _resolve_group(args, n), threads=args.threads).orbit_count
    print(value)
    return 0


# ---------------------------------------------------------------- table

def _table_records(first: int, last: int) -> list[dict]:
    records = []
    for n in range(first, last + 1):
        records.append(
            {
                "n": n,
                "c_n": closed_forms.cyclic_count(n),
                "floor_c_lower": closed_forms.asymptotic_lower_bound("cyclic", n).exact_floor,
                "d_n": closed_forms.dihedral_count(n),
                "floor_d_lower": closed_forms.asymptotic_lower_bound("dihedral", n).exact_floor,
            }
        )
    return records


def _cmd_table(args) -> int:
    first, last = args.from_n, args.to_n
    if first < 1 or last < first:
        raise DomainError("table needs 1 <= from <= to")
    records = _table_records(first, last)
    if args.format == "csv":
        out = ["n,c_n,floor_c_lower,d_n,floor_d_lower"]
        for r in records:
            out.append(
                f"{r['n']},{r['c_n']},{r['floor_c_lower']},{r['d_n']},{r['floor_d_lower']}"
            )
        sys.stdout.write("\n".join(out) + "\n")
    else:
        payload = [
            {
                "n": r["n"],
                "c_n": str(r["c_n"]),
                "floor_c_lower": str(r["floor_c_lower"]),
                "d_n": str(r["d_n"]),
                "floor_d_lower": str(r["floor_d_lower"]),
            }
            for r in records
        ]
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


# ---------------------------------------------------------------- enumerate

def _cmd_enumerate(args) -> int:
    n = _require_order(args.n)
    group = _resolve_group(args, n)
    reps = oracle.representatives(n, group)
    if args.format == "jsonl":
        for d in reps:
            sys.stdout.write(json.dumps(d.to_json_dict()) + "\n")
        return 0
    if not args.out:
        raise DomainError("--format svg-dir requires --out DIR")
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        width = max(2, len(str(len(reps))))
        for idx, d in enumerate(reps, start=1):
            (out_dir / f"diagram-{idx:0{width}d}.svg").write_text(
                render_svg(d), encoding="utf-8"
            )
    except OSError as exc:
        raise DomainError(f"cannot write to {out_dir}: {exc}") from exc
    print(f"wrote {len(reps)} SVG files to {out_dir}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------- crossings

def _cmd_crossings(args) -> int:
    n = _require_order(args.n)
    if args.method == "formula":
        poly = classic.crossing_polynomial(n)
    else:
        poly = oracle.crossing_distribution(n, threads=args.threads)
    if args.format == "csv":
        out = ["crossings,count"]
        out += [f"{j},{c}" for j, c in enumerate(poly.coefficients)]
        sys.stdout.write("\n".join(out) + "\n")
    else:
        json.dump(
            {"n": n, "coefficients": [str(c) for c in poly.coefficients]},
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
    return 0


# ---------------------------------------------------------------- strict

def _cmd_strict(args) -> int:
    n_max = _require_order(args.n_max)
    seqs = classic.strict_sequences(n_max)
    out = ["n,strict,cumulative"]
    for k in range(n_max):
        out.append(f"{k + 1},{seqs.strict[k]},{seqs.cumulative[k]}")
    sys.stdout.write("\n".join(out) + "\n")
    return 0


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    n_max = _require_order(args.n_max)
    cap = oracle.enumeration_cap()
    if args.oracle_max is None:
        oracle_max = min(n_max, 6)
    else:
        oracle_max = args.oracle_max
        if oracle_max > n_max:
            raise DomainError("--oracle-max cannot exceed --n-max")
        if oracle_max > cap:
            raise ResourceLimitError(
                f"--oracle-max {oracle_max} exceeds the enumeration cap {cap}"
            )
    threads = args.threads
    failures = 0

    def report(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        if ok:
            print(f"ok   {name}")
        else:
            failures += 1
            print(f"FAIL {name}{': ' + detail if detail else ''}")

    for kind, formula in STANDARD_FORMULAS.items():
        ok = True
        detail = ""
        for n in range(1, n_max + 1):
            expected = formula(n)
            got = burnside.burnside_count(n, make_standard_group(kind, 2 * n))
            if got != expected:
                ok, detail = False, f"n={n}: burnside {got} != formula {expected}"
                break
        report(f"formula == burnside ({kind}, n <= {n_max})", ok, detail)

    effective = min(oracle_max, cap)
    for kind, formula in STANDARD_FORMULAS.items():
        ok = True
        detail = ""
        for n in range(1, effective + 1):
            expected = formula(n)
            summary = oracle.orbit_count(n, make_standard_group(kind, 2 * n), threads=threads)
            if summary.orbit_count != expected:
                ok, detail = False, f"n={n}: oracle {summary.orbit_count} != {expected}"
                break
            mass = sum(s * k for s, k in summary.orbit_size_histogram.items())
            if mass != closed_forms.diagram_count(n):
                ok, detail = False, f"n={n}: histogram mass {mass}"
                break
        report(f"formula == oracle ({kind}, n <= {effective})", ok, detail)

    ok = True
    detail = ""
    for n in range(1, min(effective, 6) + 1):
        group = make_standard_group("cyclic", 2 * n)
        fixed_total = 0
        for g in group.elements:
            fixed = oracle.fixed_diagram_count(n, g)
            fixed_total += fixed
            expected = closed_forms.rotation_fixed_count(n, g.order())
            if fixed != expected:
                ok, detail = False, f"n={n}, order {g.order()}: {fixed} != {expected}"
                break
        if not ok:
            break
        if fixed_total != 2 * n * closed_forms.cyclic_count(n):
            ok, detail = False, f"n={n}: Burnside average mismatch"
            break
    report(f"rotation fixed counts match closed form (n <= {min(effective, 6)})", ok, detail)

    ok = True
    detail = ""
    for n in range(1, n_max + 1):
        dist = burnside.wreath_cycle_type_distribution(n)
        if dist.total != 2**n * math.factorial(n):
            ok, detail = False, f"n={n}: total {dist.total}"
            break
    report(f"wreath distribution mass == 2^n n! (n <= {n_max})", ok, detail)

    ok = True
    detail = ""
    for n in range(1, min(effective, 7) + 1):
        if classic.crossing_polynomial(n).coefficients != oracle.crossing_distribution(
            n, threads=threads
        ).coefficients:
            ok, detail = False, f"n={n}"
            break
    report(f"crossing polynomial == crossing histogram (n <= {min(effective, 7)})", ok, detail)

    ok = True
    detail = ""
    seqs = classic.strict_sequences(n_max)
    for n in range(1, min(effective, 7) + 1):
        if seqs.strict[n - 1] != oracle.strict_count(n):
            ok, detail = False, f"n={n}"
            break
    report(f"strict recurrence == strict enumeration (n <= {min(effective, 7)})", ok, detail)

    print(f"{failures} failure(s)" if failures else "all checks passed")
    return 1 if failures else 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chorddia",
        description="Count and enumerate chord diagrams up to symmetry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_options(p, with_method=None):
        p.add_argument(
            "--group",
            choices=("identity", "cyclic", "dihedral"),
            default="cyclic",
            help="standard symmetry group (default: cyclic)",
        )
        p.add_argument(
            "--group-file",
            metavar="PATH",
            help="JSON file with an arbitrary permutation group (1-based images)",
        )
        if with_method:
            p.add_argument("--method", choices=with_method, default=None)

    p_count = sub.add_parser("count", help="count nonequivalent diagrams")
    p_count.add_argument("--n", type=int, required=True, help="diagram order")
    add_group_options(p_count, with_method=("formula", "burnside", "oracle"))
    p_count.add_argument("--threads", type=int, default=1, help="workers for oracle runs")
    p_count.set_defaults(handler=_cmd_count)

    p_table = sub.add_parser("table", help="growth table of counts and bounds")
    p_table.add_argument("--from", dest="from_n", type=int, required=True)
    p_table.add_argument("--to", dest="to_n", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(handler=_cmd_table)

    p_enum = sub.add_parser("enumerate", help="list one representative per orbit")
    p_enum.add_argument("--n", type=int, required=True)
    add_group_options(p_enum)
    p_enum.add_argument("--format", choices=("jsonl", "svg-dir"), default="jsonl")
    p_enum.add_argument("--out", metavar="DIR", help="output directory for svg-dir")
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_cross = sub.add_parser("crossings", help="diagram counts by crossing number")
    p_cross.add_argument("--n", type=int, required=True)
    p_cross.add_argument("--method", choices=("formula", "oracle"), default="formula")
    p_cross.add_argument("--format", choices=("csv", "json"), default="csv")
    p_cross.add_argument("--threads", type=int, default=1)
    p_cross.set_defaults(handler=_cmd_crossings)

    p_strict = sub.add_parser("strict", help="strict diagram counts")
    p_strict.add_argument("--n-max", dest="n_max", type=int, required=True)
    p_strict.set_defaults(handler=_cmd_strict)

    p_verify = sub.add_parser("verify", help="cross-check all computation paths")
    p_verify.add_argument("--n-max", dest="n_max", type=int, required=True)
    p_verify.add_argument("--oracle-max", dest="oracle_max", type=int, default=None)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
