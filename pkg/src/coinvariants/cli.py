"""Command-line front end: ``coinv <command> [options]``.

Commands: char, hilb, dim, basis, catalan, verify.  Output is exact text or
canonical JSON (sorted keys, no floats).  Exit codes: 0 ok, 1 usage error,
2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from . import oracle
from .chartab import dihedral_class_representatives
from .series import (
    catalan_series,
    character_series,
    cyclic_character_series,
    cyclic_dimension,
    cyclic_hilbert,
    dimension,
    grading_names,
    hilbert_series,
)
from .superring import SuperRing, basis_enumerate, cyclic_basis_enumerate
from .symfunc import GradingPoly

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
THREADS_ENV = "COINV_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, ASCII only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def poly_json(poly: GradingPoly, names: Sequence[str]) -> Dict[str, object]:
    return {
        "variables": list(names),
        "terms": [{"exponent": list(e), "coefficient": c} for e, c in poly.sorted_terms()],
        "text": poly.format(names),
    }


def parse_range(text: str) -> List[int]:
    """``"2-5"``, ``"1,3,4"``, ``"2"`` or mixtures like ``"1-3,6"``."""
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError(f"empty item in range {text!r}")
        try:
            if "-" in chunk:
                lo, hi = chunk.split("-", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {chunk!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(chunk))
        except ValueError:
            raise UsageError(f"bad integer range {text!r}") from None
    return sorted(set(out))


def _check_params(group: str, n: int, k: int, j: int, cap: Optional[int] = None):
    if group == "dihedral" and n < 2:
        raise UsageError(f"dihedral group needs --n >= 2, got {n}")
    if group == "cyclic" and n < 1:
        raise UsageError(f"cyclic group needs --n >= 1, got {n}")
    if k < 0 or j < 0:
        raise UsageError(f"--k and --j must be nonnegative, got k={k}, j={j}")
    if cap is not None and cap < n + 1:
        raise UsageError(f"--degree-cap must be at least n + 1 = {n + 1}, got {cap}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coinv", description="Dihedral and cyclic coinvariant rings in bosonic and fermionic variable sets.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, sweep=False):
        p.add_argument("--group", choices=["dihedral", "cyclic"], default="dihedral")
        if sweep:
            p.add_argument("--n", default="2-4", help="integer, list or range, e.g. 2-5 or 2,4")
            p.add_argument("--k", default="0-2")
            p.add_argument("--j", default="0-2")
        else:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, default=1)
            p.add_argument("--j", type=int, default=0)
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("char", help="symbolic character series")
    common(p)
    p.add_argument("--expand", action="store_true", help="also list multiplicities per multidegree")
    for name, text in [("hilb", "Hilbert series"), ("dim", "dimension"), ("basis", "monomial basis"), ("catalan", "sign-character series")]:
        common(sub.add_parser(name, help=text))
    p = sub.add_parser("verify", help="oracle sweep against the closed forms")
    common(p, sweep=True)
    p.add_argument("--degree-cap", type=int, default=None, help="oracle degree cap (default n + 2)")
    p.add_argument("--samples", type=int, default=200, help="random monomials per cell for reduction checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--traces", action="store_true", help="also compare character traces (dihedral only)")
    return parser


# commands


def _series(args):
    if args.group == "dihedral":
        return character_series(args.n, args.k, args.j)
    return cyclic_character_series(args.n, args.k, args.j)


def cmd_char(args) -> Dict[str, object]:
    series = _series(args)
    names = grading_names(args.k, args.j)
    out: Dict[str, object] = {
        "terms": [
            {"coefficient": c, "shape": list(shape), "label": str(label)} for c, shape, label in series.terms
        ],
        "text": series.format(),
    }
    if args.expand:
        rows = []
        expanded = series.expand()
        for exp in sorted(expanded, key=lambda e: (sum(e), tuple(-x for x in e))):
            mults = {str(lab): m for lab, m in expanded[exp].items() if m}
            rows.append({"exponent": list(exp), "monomial": GradingPoly(len(exp), {exp: 1}).format(names), "characters": mults})
        out["expansion"] = rows
    return out


def _char_text(result) -> str:
    lines = [result["text"]]
    for row in result.get("expansion", []):
        body = " + ".join(f"{m}*{lab}" if m != 1 else lab for lab, m in sorted(row["characters"].items()))
        lines.append(f"{row['monomial']}: {body}")
    return "\n".join(lines)


def cmd_hilb(args):
    poly = hilbert_series(args.n, args.k, args.j) if args.group == "dihedral" else cyclic_hilbert(args.n, args.k, args.j)
    return poly_json(poly, grading_names(args.k, args.j))


def cmd_dim(args):
    if args.group == "dihedral":
        return {"dimension": dimension(args.n, args.k, args.j)}
    return {"dimension": cyclic_dimension(args.n, args.k, args.j)}


def cmd_basis(args):
    if args.group == "dihedral":
        ring, basis = SuperRing(args.k, args.j, 2), basis_enumerate(args.n, args.k, args.j)
    else:
        ring, basis = SuperRing(args.k, args.j, 1), cyclic_basis_enumerate(args.n, args.k, args.j)
    return {"size": len(basis), "monomials": [ring.format_monomial(m) for m in basis]}


def cmd_catalan(args):
    if args.group != "dihedral":
        raise UsageError("catalan is defined for the dihedral group only")
    return poly_json(catalan_series(args.n, args.k, args.j), grading_names(args.k, args.j))


def verify_cell(group: str, n: int, k: int, j: int, cap: Optional[int], samples: int, seed: int, traces: bool) -> Dict[str, object]:
    """Oracle checks for one (n, k, j); JSON-ready."""
    names = grading_names(k, j)
    got = oracle.quotient_hilbert_oracle(n, k, j, cap=cap, group=group)
    want = oracle.expected_dims(n, k, j, group)
    mismatches = []
    for d in sorted(set(got.dims) | set(want)):
        if got.dims.get(d, 0) != want.get(d, 0):
            mismatches.append({"multidegree": list(d), "oracle": got.dims.get(d, 0), "closed_form": want.get(d, 0)})
    report = oracle.certify_basis(n, k, j, group=group, samples=samples, seed=seed, cap=cap)
    cell: Dict[str, object] = {
        "group": group,
        "n": n,
        "k": k,
        "j": j,
        "degree_cap": got.cap,
        "dimension": got.total,
        "dims": [{"multidegree": list(d), "dim": v} for d, v in sorted(got.dims.items())],
        "hilbert": GradingPoly(k + j, got.dims).format(names),
        "mismatches": mismatches,
        "violations": [list(d) for d in got.violations()],
        "certification": report.to_dict(),
    }
    trace_failures = []
    if traces and group == "dihedral":
        for g, _ in dihedral_class_representatives(n):
            if oracle.trace_series(n, k, j, g) != oracle.predicted_traces(n, k, j, g):
                trace_failures.append(str(g))
        cell["trace_failures"] = trace_failures
    cell["passed"] = not mismatches and not cell["violations"] and report.passed and not trace_failures
    return cell


def _verify_star(params):
    return verify_cell(*params)


def threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be positive, got {value}")
    return value


def cmd_verify(args):
    ns, ks, js = parse_range(args.n), parse_range(args.k), parse_range(args.j)
    cells = []
    for n in ns:
        for k in ks:
            for j in js:
                _check_params(args.group, n, k, j, args.degree_cap)
                cells.append((args.group, n, k, j, args.degree_cap, args.samples, args.seed, args.traces))
    workers = threads()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_star, cells))
    else:
        results = [_verify_star(c) for c in cells]
    return {"passed": all(r["passed"] for r in results), "cells": results}


def _verify_text(result) -> str:
    lines = []
    for cell in result["cells"]:
        status = "PASS" if cell["passed"] else "FAIL"
        lines.append(f"{status} {cell['group']} n={cell['n']} k={cell['k']} j={cell['j']} dim={cell['dimension']} cap={cell['degree_cap']}")
        for m in cell["mismatches"]:
            lines.append(f"  mismatch at {tuple(m['multidegree'])}: oracle {m['oracle']}, closed form {m['closed_form']}")
        for d in cell["violations"]:
            lines.append(f"  nonzero component above top degree at {tuple(d)}")
        for f in cell["certification"]["failures"]:
            lines.append(f"  certification failed: {f['check']} at {f['multidegree']}: {f['witness']}")
        for g in cell.get("trace_failures", []):
            lines.append(f"  trace mismatch at {g}")
    lines.append("all checks passed" if result["passed"] else "verification FAILED")
    return "\n".join(lines)


COMMANDS = {
    "char": (cmd_char, _char_text),
    "hilb": (cmd_hilb, lambda r: r["text"]),
    "dim": (cmd_dim, lambda r: str(r["dimension"])),
    "basis": (cmd_basis, lambda r: "\n".join(r["monomials"])),
    "catalan": (cmd_catalan, lambda r: r["text"]),
    "verify": (cmd_verify, _verify_text),
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command != "verify":
            _check_params(args.group, args.n, args.k, args.j)
        compute, render = COMMANDS[args.command]
        result = compute(args)
    except UsageError as exc:
        print(f"coinv: error: {exc}", file=err)
        return EXIT_USAGE
    if args.format == "json":
        result = dict(result, command=args.command)
        print(dumps(result), file=out)
    else:
        print(render(result), file=out)
    if args.command == "verify" and not result["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
