"""Command-line front end.

Every subcommand prints a human-readable summary by default and a single
JSON object (keys sorted) with ``--json``.  Exit status is 0 on success,
2 on domain errors and 1 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from ._parallel import default_threads
from .arithmetical import (
    ArithmeticalMonoid,
    expand,
    frobenius_closed,
    length_set_closed,
    omit,
)
from .complex import build_complex, complex_survey
from .errors import MonoidError
from .monoid import (
    apery_set,
    build_length_table,
    factorizations,
    frobenius,
    length_set,
    make_monoid,
)
from .omission import (
    OmissionVerdict,
    Shortcut,
    check_boundary_lenset_match,
    classify_single_omission,
    compare_length_collections,
    decide_frobenius_equal,
    decide_length_sets_equal,
    tightness_scan,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _int_list(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> list:
    """``6..10`` (inclusive), ``6``, or ``1,3,5``; ``b..a`` with b > a is empty."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")


def _arith(text: str) -> tuple:
    vals = _int_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"--arith expects a,d,w; got {text!r}")
    return tuple(vals)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--stable", action="store_true", help="omit elapsed_ms from JSON output")


def _add_monoid(p: argparse.ArgumentParser, arith_only: bool = False) -> None:
    if arith_only:
        p.add_argument("--arith", type=_arith, required=True, metavar="A,D,W")
        return
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gens", type=_int_list, metavar="G1,G2,...")
    g.add_argument("--arith", type=_arith, metavar="A,D,W")


def _add_threads(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")


def _monoid_params(args) -> dict:
    if getattr(args, "arith", None):
        a, d, w = args.arith
        return {"arith": [a, d, w]}
    return {"gens": list(args.gens)}


def _numerical(args):
    if getattr(args, "arith", None):
        return expand(ArithmeticalMonoid(*args.arith))
    return make_monoid(args.gens)


def _threads(args) -> int:
    return default_threads() if args.threads is None else args.threads


# each command returns (parameters, result payload, human text)

def cmd_frobenius(args):
    if args.arith:
        M = ArithmeticalMonoid(*args.arith)
        value, method = frobenius_closed(M), "closed_form"
    else:
        value, method = frobenius(make_monoid(args.gens)), "apery"
    return _monoid_params(args), {"frobenius": value, "method": method}, str(value)


def cmd_lenset(args):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.arith:
        L = length_set_closed(ArithmeticalMonoid(*args.arith), args.n)
    else:
        L = length_set(make_monoid(args.gens), args.n)
    params = {**_monoid_params(args), "n": args.n}
    payload = {"member": L is not None, "length_set": None if L is None else list(L)}
    return params, payload, "gap" if L is None else str(list(L))


def cmd_table(args):
    if args.upto < 0:
        raise UsageError("--upto must be non-negative")
    T = build_length_table(_numerical(args), args.upto)
    rows = T.to_json_rows()
    text = "\n".join(f"{n}: {'gap' if r is None else r}" for n, r in enumerate(rows))
    return {**_monoid_params(args), "upto": args.upto}, {"rows": rows}, text


def cmd_apery(args):
    S = _numerical(args)
    m = S.multiplicity if args.m is None else args.m
    A = apery_set(S, m)
    return {**_monoid_params(args), "m": m}, {"apery_set": A}, str(A)


def cmd_factor(args):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    S = _numerical(args)
    fs = factorizations(S, args.n)
    payload = {"generators": list(S.generators), "factorizations": [list(f) for f in fs]}
    text = "\n".join(" + ".join(f"{z}*{g}" for z, g in zip(f, S.generators) if z) or "0" for f in fs)
    return {**_monoid_params(args), "n": args.n}, payload, text or "(none)"


def _edge_lengths_verdict(M: ArithmeticalMonoid, G: frozenset) -> OmissionVerdict:
    """Several omitted indices including 1 or w-1: search for a witness."""
    hit = compare_length_collections(expand(M), omit(M, G), 2 * M.a * M.top + M.d)
    if hit is None:
        print(
            "warning: no witness found; reporting lengths_equal=false for an omission "
            "set touching index 1 or w-1",
            file=sys.stderr,
        )
    return OmissionVerdict(
        lengths_equal=False,
        length_shortcut=Shortcut.SINGLE_EDGE,
        length_witness=None if hit is None else hit[0],
    )


def omit_check(M: ArithmeticalMonoid, G: frozenset, what: str) -> OmissionVerdict:
    verdict = OmissionVerdict()
    if len(G) == 1:
        v = classify_single_omission(M, next(iter(G)))
        if what in ("lengths", "both"):
            verdict = verdict.merge(
                OmissionVerdict(lengths_equal=v.lengths_equal, length_shortcut=v.length_shortcut,
                                length_witness=v.length_witness)
            )
        if what in ("frobenius", "both"):
            verdict = verdict.merge(
                OmissionVerdict(frobenius_equal=v.frobenius_equal, frobenius_shortcut=v.frobenius_shortcut,
                                frobenius_witness=v.frobenius_witness)
            )
        return verdict
    if what in ("lengths", "both"):
        if not G:
            verdict = verdict.merge(OmissionVerdict(lengths_equal=True))
        elif all(2 <= i <= M.w - 2 for i in G):
            verdict = verdict.merge(decide_length_sets_equal(M, G))
        else:
            verdict = verdict.merge(_edge_lengths_verdict(M, G))
    if what in ("frobenius", "both"):
        verdict = verdict.merge(decide_frobenius_equal(M, G))
    return verdict


def cmd_omit_check(args):
    M = ArithmeticalMonoid(*args.arith)
    G = frozenset(args.omit)
    v = omit_check(M, G, args.what)
    d = v.to_dict()
    params = {"arith": list(args.arith), "omit": sorted(G), "what": args.what}
    text = "\n".join(f"{k}: {d[k]}" for k in sorted(d) if d[k] is not None)
    return params, d, text


def cmd_boundary(args):
    M = ArithmeticalMonoid(*args.arith)
    N = 5 * M.top if args.bound is None else args.bound
    rep = check_boundary_lenset_match(M, N)
    text = f"checked {rep.checked} elements up to {N}: {len(rep.failures)} failures"
    return {"arith": list(args.arith), "bound": N}, rep.to_dict(), text


def cmd_complex(args):
    M = ArithmeticalMonoid(*args.arith)
    C = build_complex(M, use_shortcut=not args.no_shortcut, fast=args.fast, threads=_threads(args))
    d = C.to_dict()
    text = "\n".join(
        [
            f"ground set: {d['ground_set']}",
            f"faces: {len(C.faces)} of {2 ** len(C.ground_set)}",
            f"maximal faces ({len(d['maximal_faces'])}): {d['maximal_faces']}",
            f"minimal non-faces ({len(d['minimal_nonfaces'])}): {d['minimal_nonfaces']}",
            f"downward closed: {d['downward_closed']}",
        ]
    )
    params = {"arith": list(args.arith), "fast": args.fast, "shortcut": not args.no_shortcut}
    return params, d, text


def cmd_scan_tightness(args):
    rows = tightness_scan(args.w, args.d, threads=_threads(args))
    table = [r.to_dict() for r in rows]
    lines = ["w  d  largest_bad_a  w^2-3w+1"]
    lines += [f"{r.w:<2} {r.d:<2} {str(r.largest_bad_a):<14} {r.upper_bound}" for r in rows]
    return {"w": args.w, "d": args.d}, {"table": table}, "\n".join(lines)


def cmd_survey(args):
    rows = complex_survey(args.a, args.d, args.w, fast=args.fast, threads=_threads(args))
    bad = [r for r in rows if not r["downward_closed"]]
    text = f"{len(rows)} cells, {len(bad)} not downward closed"
    for r in bad:
        text += f"\nVIOLATION a={r['a']} d={r['d']} w={r['w']}: {r['violations']}"
    params = {"a": args.a, "d": args.d, "w": args.w, "fast": args.fast}
    return params, {"cells": rows, "violations": len(bad)}, text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arithomit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frobenius", help="Frobenius number")
    _add_monoid(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("lenset", help="length set of one element")
    _add_monoid(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lenset)

    p = sub.add_parser("table", help="length sets of all elements up to a bound")
    _add_monoid(p)
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("apery", help="Apery set")
    _add_monoid(p)
    p.add_argument("--m", type=int, default=None, help="default: smallest generator")
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("factor", help="all factorizations (brute force)")
    _add_monoid(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("omit-check", help="does omitting generators keep lengths / Frobenius?")
    _add_monoid(p, arith_only=True)
    p.add_argument("--omit", type=_int_list, required=True, metavar="I1,I2,...",
                   help="indices i of a+i*d to omit")
    p.add_argument("--what", choices=("lengths", "frobenius", "both"), default="both")
    p.set_defaults(func=cmd_omit_check)

    p = sub.add_parser("boundary", help="match length sets of S_1 and S_{w-1}")
    _add_monoid(p, arith_only=True)
    p.add_argument("--bound", type=int, default=None, help="default: 5(a+wd)")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("complex", help="omission sets preserving the set of length sets")
    _add_monoid(p, arith_only=True)
    p.add_argument("--fast", action="store_true", help="skip supersets of non-faces")
    p.add_argument("--no-shortcut", action="store_true", help="never use the a >= w^2-3w shortcut")
    _add_threads(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("scan-tightness", help="largest a with F(S) != F(S_*)")
    p.add_argument("--w", type=_int_range, required=True, metavar="RANGE")
    p.add_argument("--d", type=_int_range, required=True, metavar="RANGE")
    _add_threads(p)
    p.set_defaults(func=cmd_scan_tightness)

    p = sub.add_parser("survey", help="downward closure over a grid of monoids")
    p.add_argument("--a", type=_int_range, required=True, metavar="RANGE")
    p.add_argument("--d", type=_int_range, required=True, metavar="RANGE")
    p.add_argument("--w", type=_int_range, required=True, metavar="RANGE")
    p.add_argument("--fast", action="store_true")
    _add_threads(p)
    p.set_defaults(func=cmd_survey)

    for p in sub.choices.values():
        _add_common(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        params, payload, text = args.func(args)
    except UsageError as e:
        print(f"arithomit {args.command}: error: {e}", file=sys.stderr)
        return 1
    except MonoidError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000
    if args.json:
        out = {"command": args.command, "parameters": params, "result": payload}
        if not args.stable:
            out["elapsed_ms"] = round(elapsed_ms, 3)
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
