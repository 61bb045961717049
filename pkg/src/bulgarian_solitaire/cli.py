"""Command-line entry point: ``bulgarian-solitaire <command> [options]``.

Every command builds a report dictionary.  ``--output json`` prints it with
sorted keys; the wall time lives under ``"timing"`` so the rest of the report
is byte-identical between runs.  Exit codes: 0 all checks passed, 1 a check
failed, 2 invalid input, 3 a resource guard tripped.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Callable

from .errors import NoFit, ResourceLimitError
from .forest import pruned_series
from .gf import (
    catalog_lookup,
    closed_form_catalog,
    corrected_form,
    default_depth,
    fit_bounds,
    gf_equal,
    limit_gf,
    series_expand,
)
from .necklaces import Necklace, is_primitive, parse_necklace, power
from .orbits import (
    build_orbit,
    chebyshev_T_at_2,
    conjecture_ratios,
    decompose,
    level_gf,
    orbit_size_sequence,
)
from .partitions import partition_count

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_MAX_NODES = 50_000_000

# command -> (required options, optional options)
COMMANDS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "orbits": (("n",), ("members",)),
    "level-gf": (("necklace", "k"), ()),
    "limit-gf": (("necklace",), ("depth",)),
    "coincide": (("necklace", "k"), ()),
    "orbit-sizes": (("necklace", "k_max"), ()),
    "conjecture": (("necklace", "k_max"), ()),
    "catalog-check": ((), ("depth",)),
}


class InputError(ValueError):
    pass


class Result:
    """Payload of one command: results, named checks and a table for text/CSV."""

    def __init__(self):
        self.results: dict = {}
        self.checks: dict[str, bool] = {}
        self.header: list[str] = []
        self.rows: list[list] = []
        self.notes: list[str] = []

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _forest_necklace(P: Necklace) -> Necklace:
    if P.word == (0,) or P.word == (0, 1) or (P.p >= 3 and is_primitive(P)):
        return P
    if not is_primitive(P):
        raise InputError(
            f"{P} is not primitive; forest commands take the primitive root "
            f"(W, BW or a primitive necklace of length >= 3)"
        )
    raise InputError(f"{P} has no forest: use W, BW or a primitive necklace of length >= 3")


def _primitive(P: Necklace) -> Necklace:
    if not is_primitive(P):
        raise InputError(f"{P} is not primitive; give the primitive word and use --k")
    return P


def _positive(name: str, v: int) -> int:
    if v < 1:
        raise InputError(f"--{name.replace('_', '-')} must be positive, got {v}")
    return v


def cmd_orbits(args, res: Result) -> None:
    n = _positive("n", args.n)
    orbits = decompose(n, max_nodes=args.max_nodes)
    total = sum(o.size for o in orbits)
    res.results = {
        "n": n,
        "orbits": [o.to_dict(members=args.members) for o in orbits],
        "total": total,
        "partition_count": partition_count(n),
    }
    res.checks["sum_equals_partition_count"] = total == partition_count(n)
    if args.members:
        res.header = ["necklace", "partition", "level"]
        res.rows = [[o.necklace.label, str(p), lev] for o in orbits for p, lev in o.rows()]
    else:
        res.header = ["necklace", "size", "cycle_length", "histogram"]
        res.rows = [
            [o.necklace.label, o.size, o.cycle_length, " ".join(map(str, o.histogram))]
            for o in orbits
        ]


def cmd_level_gf(args, res: Result) -> None:
    P = _primitive(args.necklace)
    k = _positive("k", args.k)
    o = build_orbit(power(P, k), max_nodes=args.max_nodes)
    poly = level_gf(o)
    res.results = {
        "necklace": P.label,
        "k": k,
        "n": o.n,
        "polynomial": str(poly),
        "coefficients": list(poly.coefficients),
        "size": o.size,
    }
    res.header = ["level", "count"]
    res.rows = [[d, c] for d, c in enumerate(poly.coefficients)]


def cmd_limit_gf(args, res: Result) -> None:
    P = _forest_necklace(args.necklace)
    D = default_depth(P) if args.depth is None else args.depth
    if D < 1:
        raise InputError("--depth must be positive")
    try:
        H = limit_gf(P, D, max_nodes=args.max_nodes)
    except NoFit as exc:
        res.results = {"necklace": P.label, "depth": D, "fit": None, "error": str(exc)}
        res.checks["fit_found"] = False
        res.notes.append(f"no fit at depth {D}; rerun with a larger --depth")
        return
    a, b = fit_bounds(P)
    series = series_expand(H, D)
    res.results = {
        "necklace": P.label,
        "depth": D,
        "fit": H.to_dict(),
        "text": str(H),
        "series": series,
        "num_degree": H.num.degree,
        "den_degree": H.den.degree,
    }
    res.checks["fit_found"] = True
    res.checks["num_degree_bound"] = H.num.degree <= a
    res.checks["den_degree_bound"] = H.den.degree <= b
    printed = catalog_lookup(P)
    if printed is not None:
        res.results["catalog"] = str(printed)
        res.checks["catalog_match"] = gf_equal(H, printed)
    fixed = corrected_form(P)
    if fixed is not None:
        res.results["corrected"] = str(fixed)
        res.results["corrected_match"] = gf_equal(H, fixed)
    res.header = ["level", "coefficient"]
    res.rows = [[d, c] for d, c in enumerate(series)]


def _agreement(a: list[int], b: list[int]) -> int:
    d = -1
    for x, y in zip(a, b):
        if x != y:
            break
        d += 1
    return d


def cmd_coincide(args, res: Result) -> None:
    P = _forest_necklace(args.necklace)
    k = _positive("k", args.k)
    o = build_orbit(power(P, k + 1), max_nodes=args.max_nodes)
    hist = list(level_gf(o).coefficients)
    # compare one level past the orbit's depth so a match that runs off its end is visible
    L = len(hist)
    limit = pruned_series(P, L, max_nodes=args.max_nodes)
    hist_ext = hist + [0]
    d = _agreement(hist_ext, limit)
    res.results = {
        "necklace": P.label,
        "k": k,
        "orbit": power(P, k + 1).label,
        "orbit_levels": hist,
        "limit_series": limit[: L + 1],
        "agreement_depth": d,
    }
    if P.word == (0, 1):
        res.checks["agreement_at_least_k"] = d >= k
    else:
        res.notes.append("agreement depth is informational for this necklace")
    res.header = ["level", "orbit", "limit"]
    res.rows = [[i, hist_ext[i], limit[i]] for i in range(L + 1)]


def _expected_sizes(P: Necklace, k_max: int) -> list[int] | None:
    label = P.label
    if label == "BW":
        return [chebyshev_T_at_2(k) for k in range(1, k_max + 1)]
    if label == "BWW":
        return [5**k for k in range(1, k_max + 1)]
    if label == "BBW":
        return [7 * 5 ** (k - 1) for k in range(1, k_max + 1)]
    return None


def cmd_orbit_sizes(args, res: Result) -> None:
    P = _primitive(args.necklace)
    k_max = _positive("k_max", args.k_max)
    sizes = orbit_size_sequence(P, k_max, max_nodes=args.max_nodes)
    expected = _expected_sizes(P, k_max)
    res.results = {"necklace": P.label, "k_max": k_max, "sizes": sizes, "expected": expected}
    res.header = ["k", "size", "expected"]
    res.rows = []
    for k, s in enumerate(sizes, start=1):
        e = None if expected is None else expected[k - 1]
        res.rows.append([k, s, "" if e is None else e])
        if e is not None:
            res.checks[f"k={k}"] = s == e


def cmd_conjecture(args, res: Result) -> None:
    P = args.necklace
    if not is_primitive(P) or P.p < 3:
        raise InputError(f"{P}: the conjecture command needs a primitive necklace of length >= 3")
    k_max = args.k_max
    if k_max < 2:
        raise InputError("--k-max must be at least 2")
    rep = conjecture_ratios(P, k_max, max_nodes=args.max_nodes)
    res.results = rep.to_dict()
    res.header = ["k", "size", "ratio", "partner_size", "partner_ratio"]
    res.rows = [
        [
            k,
            rep.sizes[k - 1],
            "" if k == 1 else str(rep.ratios[k - 2]),
            rep.partner_sizes[k - 1],
            "" if k == 1 else str(rep.partner_ratios[k - 2]),
        ]
        for k in range(1, k_max + 1)
    ]
    res.notes.append("evidence only; no ratio is asserted")


def cmd_catalog_check(args, res: Result) -> None:
    entries = []
    res.header = ["necklace", "depth", "fitted", "catalog_match", "corrected_match"]
    for P, printed in closed_form_catalog():
        D = default_depth(P) if args.depth is None else args.depth
        try:
            H = limit_gf(P, D, max_nodes=args.max_nodes)
        except NoFit as exc:
            entries.append({"necklace": P.label, "depth": D, "error": str(exc)})
            res.checks[P.label] = False
            res.rows.append([P.label, D, "no fit", False, ""])
            continue
        ok = gf_equal(H, printed)
        fixed = corrected_form(P)
        entry = {
            "necklace": P.label,
            "depth": D,
            "fitted": str(H),
            "catalog": str(printed),
            "catalog_match": ok,
        }
        if fixed is not None:
            entry["corrected"] = str(fixed)
            entry["corrected_match"] = gf_equal(H, fixed)
        entries.append(entry)
        res.checks[P.label] = ok
        res.rows.append([P.label, D, str(H), ok, entry.get("corrected_match", "")])
    res.results = {"entries": entries}


HANDLERS: dict[str, Callable] = {
    "orbits": cmd_orbits,
    "level-gf": cmd_level_gf,
    "limit-gf": cmd_limit_gf,
    "coincide": cmd_coincide,
    "orbit-sizes": cmd_orbit_sizes,
    "conjecture": cmd_conjecture,
    "catalog-check": cmd_catalog_check,
}


def _necklace_arg(text: str) -> Necklace:
    try:
        return parse_necklace(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--necklace", type=_necklace_arg, help="necklace word, e.g. BWW or 100")
    common.add_argument("--n", type=int, help="number of cards")
    common.add_argument("--k", type=int, help="power of the necklace")
    common.add_argument("--k-max", dest="k_max", type=int, help="largest power")
    common.add_argument("--depth", type=int, help="forest truncation depth")
    common.add_argument("--members", action="store_true", help="list orbit members")
    common.add_argument("--output", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--max-nodes", dest="max_nodes", type=int, default=DEFAULT_MAX_NODES)

    parser = argparse.ArgumentParser(
        prog="bulgarian-solitaire",
        description="Orbits and level generating functions of Bulgarian Solitaire.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "orbits": "decompose the partitions of n into orbits",
        "level-gf": "level polynomial of the orbit of P^k",
        "limit-gf": "fit the limiting level generating function of P",
        "coincide": "compare the orbit of P^(k+1) with the limit series",
        "orbit-sizes": "orbit sizes of P^k for k = 1..k_max",
        "conjecture": "successive orbit-size ratios of P^k and its color swap",
        "catalog-check": "recompute every stored closed form",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _validate(args) -> None:
    required, optional = COMMANDS[args.command]
    allowed = set(required) | set(optional)
    for name in required:
        if getattr(args, name) is None:
            raise InputError(f"{args.command} requires --{name.replace('_', '-')}")
    for name in ("necklace", "n", "k", "k_max", "depth"):
        if name not in allowed and getattr(args, name) is not None:
            raise InputError(f"{args.command} does not take --{name.replace('_', '-')}")
    if args.members and "members" not in allowed:
        raise InputError(f"{args.command} does not take --members")
    if args.max_nodes < 1:
        raise InputError("--max-nodes must be positive")


def _inputs(args) -> dict:
    out = {}
    for name in COMMANDS[args.command][0] + COMMANDS[args.command][1]:
        v = getattr(args, name)
        if isinstance(v, Necklace):
            v = v.label
        if v is not None and v is not False:
            out[name] = v
    return out


def render(report: dict, res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(res.header)
        w.writerows(res.rows)
        return buf.getvalue()
    lines = [f"{report['command']}: " + ", ".join(f"{k}={v}" for k, v in report["inputs"].items())]
    for key in ("text", "polynomial", "catalog", "corrected", "agreement_depth", "total"):
        if key in res.results:
            lines.append(f"  {key}: {res.results[key]}")
    if res.rows:
        widths = [
            max(len(str(x)) for x in col) for col in zip(res.header, *res.rows)
        ]
        fmt_row = lambda row: "  " + "  ".join(str(x).ljust(w) for x, w in zip(row, widths))
        lines.append(fmt_row(res.header).rstrip())
        lines.extend(fmt_row(r).rstrip() for r in res.rows)
    for note in res.notes:
        lines.append(f"  note: {note}")
    for name, ok in res.checks.items():
        lines.append(f"  [{'PASS' if ok else 'FAIL'}] {name}")
    lines.append("PASS" if res.passed else "FAIL")
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, dict | None, str, bool]:
    """Execute one command; returns ``(exit_code, report, rendered_text, written)``.

    With ``--out`` the rendered text goes to that file (``written`` is True)
    and is also returned.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
        return (EXIT_OK if code == 0 else EXIT_INPUT), None, "", False
    start = time.perf_counter()
    res = Result()
    try:
        _validate(args)
        HANDLERS[args.command](args, res)
    except InputError as exc:
        return EXIT_INPUT, None, f"error: {exc}\n", False
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, None, f"resource limit: {exc}\n", False
    report = {
        "command": args.command,
        "inputs": _inputs(args),
        "results": res.results,
        "checks": res.checks,
        "passed": res.passed,
        "notes": res.notes,
        "timing": {"wall_time_s": round(time.perf_counter() - start, 3)},
    }
    text = render(report, res, args.output)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return (EXIT_OK if res.passed else EXIT_FAIL), report, text, bool(args.out)


def main(argv: list[str] | None = None) -> int:
    code, report, text, written = run(argv)
    if report is None:
        sys.stderr.write(text)
    elif not written:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
