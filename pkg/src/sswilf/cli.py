"""Command-line interface.

Subcommands: pyramid, count, equiv, reps, prefixes, shift-orbit, oracle,
table.  All output is deterministic; ``--json`` switches every command to a
stable JSON rendering.  Exit codes: 0 success (or a true answer), 1 semantic
mismatch (oracle disagreement, or a false answer under ``--strict``),
2 usage or parse errors, 3 broken internal invariants.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from . import counting, oracle, representatives, shift, trapezoid, words
from .errors import InternalError, LimitExceeded, UsageError
from .pyramid import (
    canonical_member,
    class_size_exponent,
    pyramidal_sequence,
)

_DEFAULT_REPS_LIMIT = 9


def _fmt(value: int, args) -> str:
    return f"{value:,}" if args.thousands else str(value)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _perm(text: str):
    return words.parse_permutation(text)


# -- pyramid ------------------------------------------------------------------

def _cmd_pyramid(args) -> int:
    u = _perm(args.perm)
    n = len(u)
    if n == 1:
        if args.json:
            _emit_json(
                {
                    "permutation": [1],
                    "levels": [],
                    "exponent": 0,
                    "class_size": 1,
                    "canonical_member": [1],
                },
            )
        else:
            print("the single-letter permutation has an empty pyramid")
        return 0
    p = pyramidal_sequence(u)
    j = class_size_exponent(p)
    member = canonical_member(p)
    if args.json:
        _emit_json(
            {
                "permutation": list(u),
                "levels": p.to_json(),
                "exponent": j,
                "class_size": 2**j,
                "canonical_member": list(member),
            },
        )
        return 0
    print(f"pyramid of {words.format_word(u)} (size {n}):")
    for i in range(n - 1, 0, -1):
        gaps = ", ".join(str(e) for e in p.level(i))
        print(f"  level {i}: ({gaps})")
    print(f"class size: 2^{j} = {2**j}")
    print(f"canonical member: {words.format_word(member)}")
    return 0


# -- count --------------------------------------------------------------------

_FAMILIES = {
    "s": ("n", counting.class_count, "equivalence classes of S_n"),
    "sjn": ("jn", counting.class_count_by_exponent, "classes of size 2^j in S_n"),
    "d": ("in", counting.minimal_prefix_count, "minimal periodic-complement prefixes"),
    "p": ("in", counting.periodic_prefix_count, "prefixes with periodic complement"),
    "a": ("n", counting.noninterval_count, "permutations with no interval prefix"),
    "sh": ("n", counting.shift_class_count, "shift classes of S_n"),
}


def _render_grid(rows, cols, cell, corner) -> None:
    header = [corner] + [str(c) for c in cols]
    body = []
    for r in rows:
        body.append([str(r)] + [cell(r, c) for c in cols])
    widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
    for line in [header] + body:
        print("  ".join(text.rjust(w) for text, w in zip(line, widths)))


def _count_table(family: str, n_max: int, args) -> int:
    fmt = lambda v: _fmt(v, args)  # noqa: E731
    if family in ("s", "sh", "a"):
        start = 2 if family == "a" else 1
        fn = _FAMILIES[family][1]
        values = {n: fn(n) for n in range(start, n_max + 1)}
        if args.json:
            _emit_json(
                {"family": family, "values": [
                    {"n": n, "value": v} for n, v in sorted(values.items())
                ]},
            )
        else:
            _render_grid(
                [family], list(range(start, n_max + 1)),
                lambda r, c: fmt(values[c]), "n",
            )
        return 0
    if family == "d":
        cells = {
            (i, n): counting.minimal_prefix_count(i, n)
            for n in range(3, n_max + 1)
            for i in range(1, n - 1)
        }
        rows = list(range(1, n_max - 1))
        cols = list(range(3, n_max + 1))
    elif family == "p":
        cells = {
            (i, n): counting.periodic_prefix_count(i, n)
            for n in range(3, n_max + 1)
            for i in range(0, n - 1)
        }
        rows = list(range(0, n_max - 1))
        cols = list(range(3, n_max + 1))
    else:  # sjn
        cells = {
            (j, n): counting.class_count_by_exponent(j, n)
            for n in range(2, n_max + 1)
            for j in range(1, n)
        }
        rows = list(range(1, n_max))
        cols = list(range(2, n_max + 1))
    if args.json:
        _emit_json(
            {"family": family, "values": [
                {"i": i, "n": n, "value": v} for (i, n), v in sorted(cells.items())
            ]},
        )
    else:
        label = "j\\n" if family == "sjn" else "i\\n"
        _render_grid(
            rows, cols,
            lambda r, c: fmt(cells[(r, c)]) if (r, c) in cells else "",
            label,
        )
    return 0


def _cmd_count(args) -> int:
    family = args.family
    kind, fn, _ = _FAMILIES[family]
    if args.table:
        return _count_table(family, args.n_max, args)
    if args.n is None:
        raise UsageError(f"count {family} needs --n")
    if kind == "n":
        value = fn(args.n)
    elif kind == "in":
        if args.i is None:
            raise UsageError(f"count {family} needs --i")
        value = fn(args.i, args.n)
    else:
        if args.j is None:
            raise UsageError(f"count {family} needs --j")
        value = fn(args.j, args.n)
    if args.json:
        payload = {"family": family, "n": args.n, "value": value}
        if kind == "in":
            payload["i"] = args.i
        if kind == "jn":
            payload["j"] = args.j
        _emit_json(payload)
    else:
        print(_fmt(value, args))
    return 0


# -- equiv --------------------------------------------------------------------

def _cmd_equiv(args) -> int:
    u = _perm(args.u)
    v = _perm(args.v)
    relation = args.relation
    if relation == "ss":
        from .pyramid import is_ss_equivalent

        answer = is_ss_equivalent(u, v)
    elif relation == "strong-shift":
        answer = shift.is_strong_shift_equivalent(u, v)
    else:
        answer = shift.is_shift_equivalent(u, v)
    witness = None
    if args.witness and answer and relation in ("strong-shift", "shift"):
        witness = shift.find_witness(u, v, with_reversals=relation == "shift")
    if args.json:
        payload = {
            "u": list(u),
            "v": list(v),
            "relation": relation,
            "equivalent": answer,
        }
        if witness is not None:
            payload["witness"] = [
                "reversal" if m == "reversal" else {"height": m.height, "offset": m.offset}
                for m in witness
            ]
        _emit_json(payload)
    else:
        print("true" if answer else "false")
        if witness is not None:
            for m in witness:
                if m == "reversal":
                    print("reversal")
                else:
                    print(f"cut {m.height} shift {m.offset:+d}")
    if args.strict and not answer:
        return 1
    return 0


# -- reps ---------------------------------------------------------------------

def _cmd_reps(args) -> int:
    n = args.n
    if n > (args.limit if args.limit is not None else _DEFAULT_REPS_LIMIT):
        raise LimitExceeded(f"n={n} exceeds the listing limit; pass --limit")
    records = representatives.decompositions(n)
    members = [words.inverse(w) if args.invert else w for w, _ in records]
    if args.json:
        payload = {"n": n, "members": [list(m) for m in members]}
        if args.decompose:
            payload["decompositions"] = [
                {"i": i, "prefix": list(u), "pattern": list(tau)}
                for _, (i, u, tau) in records
            ]
        _emit_json(payload)
        return 0
    for member, (_, (i, u, tau)) in zip(members, records):
        if args.decompose and i:
            print(
                f"{words.format_word(member)}  prefix={words.format_word(u)} "
                f"tail={words.format_word(tau)} i={i}"
            )
        else:
            print(words.format_word(member))
    return 0


# -- prefixes -----------------------------------------------------------------

def _cmd_prefixes(args) -> int:
    members = trapezoid.minimal_prefixes(args.i, args.n)
    if args.json:
        _emit_json(
            {"i": args.i, "n": args.n, "members": [list(m) for m in members]},
        )
        return 0
    for m in members:
        print(words.format_word(m))
    return 0


# -- shift-orbit --------------------------------------------------------------

def _cmd_shift_orbit(args) -> int:
    u = _perm(args.perm)
    orbit = (
        shift.shift_class(u) if args.with_reversals else shift.strong_shift_class(u)
    )
    members = sorted(orbit)
    if args.json:
        _emit_json(
            {
                "permutation": list(u),
                "with_reversals": bool(args.with_reversals),
                "orbit": [list(m) for m in members],
            },
        )
        return 0
    for m in members:
        print(words.format_word(m))
    return 0


# -- oracle -------------------------------------------------------------------

def _cmd_oracle(args) -> int:
    mismatches: list[str] = []
    checks = ("ss", "prefixes", "shift") if args.check == "all" else (args.check,)
    for check in checks:
        if check == "ss":
            found = oracle.check_ss(args.n_max, workers=args.workers, limit=args.limit)
        elif check == "prefixes":
            found = oracle.check_prefixes(args.n_max, limit=args.limit)
        else:
            found = oracle.check_shift(args.n_max, limit=args.limit)
        mismatches.extend(f"{check}: {m}" for m in found)
        if not args.json:
            status = "ok" if not found else f"{len(found)} mismatches"
            print(f"check {check} up to n={args.n_max}: {status}")
    if args.json:
        _emit_json(
            {
                "checks": list(checks),
                "n_max": args.n_max,
                "mismatches": mismatches,
            },
        )
    else:
        for m in mismatches:
            print(f"MISMATCH {m}")
    return 1 if mismatches else 0


# -- table --------------------------------------------------------------------

def _cmd_table(args) -> int:
    k = args.which
    if k == 1:
        return _count_table("d", args.n_max, args)
    if k == 2:
        return _count_table("s", args.n_max, args)
    if k == 3:
        return _count_table("sh", args.n_max, args)
    if k == 4:
        return _count_table("sjn", args.n_max, args)
    n_max = min(args.n_max, 6) if args.n_max == 12 else args.n_max
    if args.json:
        _emit_json(
            {
                "table": 5,
                "sets": {
                    str(n): [list(w) for w in representatives.inverse_representatives(n)]
                    for n in range(3, n_max + 1)
                },
            },
        )
        return 0
    for n in range(3, n_max + 1):
        print(f"n={n}:")
        for w in representatives.inverse_representatives(n):
            print(f"  {words.format_word(w)}")
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument(
        "--thousands", action="store_true", help="group digits of large numbers"
    )

    parser = argparse.ArgumentParser(
        prog="wilf",
        description="Equivalence classes of permutations: invariants, counts, "
        "representatives, shift orbits, and brute-force cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pyramid", parents=[common], help="pyramid of a permutation")
    p.add_argument("perm", help="permutation text, e.g. 592738164 or '5 9 2 ...'")
    p.set_defaults(func=_cmd_pyramid)

    p = sub.add_parser("count", parents=[common], help="exact counts")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--table", action="store_true", help="print the whole table")
    p.add_argument("--n-max", type=int, default=12, dest="n_max")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("equiv", parents=[common], help="test an equivalence")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument(
        "--relation", choices=("ss", "strong-shift", "shift"), required=True
    )
    p.add_argument("--witness", action="store_true", help="print a move sequence")
    p.add_argument("--strict", action="store_true", help="exit 1 on false")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("reps", parents=[common], help="class representatives")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--invert", action="store_true", help="print the inverses")
    p.add_argument("--decompose", action="store_true", help="annotate the assembly")
    p.add_argument("--limit", type=int, help="raise the size guard")
    p.set_defaults(func=_cmd_reps)

    p = sub.add_parser(
        "prefixes", parents=[common], help="minimal periodic-complement prefixes"
    )
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_prefixes)

    p = sub.add_parser(
        "shift-orbit", parents=[common], help="orbit under rigid shifts"
    )
    p.add_argument("perm")
    p.add_argument(
        "--with-reversals",
        action="store_true",
        dest="with_reversals",
        help="also close under reversal",
    )
    p.set_defaults(func=_cmd_shift_orbit)

    p = sub.add_parser(
        "oracle", parents=[common], help="brute force vs recurrences"
    )
    p.add_argument("--check", choices=("ss", "shift", "prefixes", "all"), default="all")
    p.add_argument("--n-max", type=int, default=7, dest="n_max")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--limit", type=int, help="raise the sweep size guard")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("table", parents=[common], help="print a whole table")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--n-max", type=int, default=12, dest="n_max")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
