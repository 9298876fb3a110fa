"""Command-line front end: ``sylowbench <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(bad arguments, unreadable files, unknown groups, caps too small).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import arith
from .catalog import CatalogError, resolve
from .errors import CapExceeded, SylowBenchError
from .groups import Caps, orbit
from .perm import format_cycles
from .pipeline import prove
from .suites import FAIL, HEADER, SUITES, run_lemmas, run_selftest, tally
from .sylow import count_sylow
from .trace_check import validate_trace


class UsageError(Exception):
    pass


def format_table(header: Sequence[str], rows: Sequence[Sequence], tsv: bool) -> str:
    rows = [[str(c) for c in r] for r in rows]
    if tsv:
        return "".join("\t".join(r) + "\n" for r in [list(header)] + rows)
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = []
    for r in [list(header)] + rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _caps(args) -> Caps:
    return Caps(elements=args.cap_elements, orbit=args.cap_orbit)


def _group(ref: str):
    try:
        return resolve(ref)
    except (ValueError, CatalogError, OSError) as exc:
        raise UsageError(str(exc)) from None


def _prime(p: int) -> int:
    if not arith.is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def cmd_info(args, out) -> int:
    name, G = _group(args.group)
    caps = _caps(args)
    seen, orbits = set(), []
    for x in range(G.degree):
        if x not in seen:
            o = orbit(G, x)
            seen.update(o)
            orbits.append(len(o))
    order = G.order()
    rows = [
        ("name", name),
        ("degree", G.degree),
        ("order", order),
        ("factorization", " * ".join(f"{q}^{e}" for q, e in arith.factorize(order)) or "1"),
        ("generators", " , ".join(format_cycles(g) for g in G.generators) or "()"),
        ("orbit sizes", " ".join(map(str, sorted(orbits)))),
    ]
    if order <= caps.elements:
        rows.append(("abelian", G.is_abelian()))
    out.write(format_table(["field", "value"], rows, args.tsv))
    return 0


def cmd_sylow(args, out) -> int:
    name, G = _group(args.group)
    caps = _caps(args)
    primes = [_prime(args.p)] if args.p is not None else arith.prime_divisors(G.order())
    header = ["group", "p", "order", "sylow_order", "count", "normalizer_order",
              "p_core_order", "kernel_order", "path", "check"]
    rows, failed = [], False
    for p in primes:
        r = count_sylow(G, p, caps)
        problems = r.check()
        failed |= bool(problems)
        rows.append([name, p, r.group_order, r.sylow_order, r.count, r.normalizer_order,
                     r.p_core_order, r.action_kernel_order, r.normalizer_path,
                     "; ".join(problems) or "ok"])
    out.write(format_table(header, rows, args.tsv))
    return 1 if failed else 0


def _report(items, args, out) -> int:
    out.write(format_table(HEADER, [it.row() for it in items], args.tsv))
    counts = tally(items)
    print(" ".join(f"{k.lower()}={v}" for k, v in counts.items()), file=sys.stderr)
    return 1 if counts[FAIL] else 0


def cmd_lemmas(args, out) -> int:
    return _report(run_lemmas(args.suite, args.max_order, _caps(args)), args, out)


def cmd_selftest(args, out) -> int:
    return _report(run_selftest(_caps(args)), args, out)


def cmd_scan(args, out) -> int:
    p = _prime(args.p)
    if args.max < 1:
        raise UsageError("--max must be positive")
    extra: list[int] = []
    if args.extra:
        try:
            with open(args.extra, encoding="utf-8") as fh:
                extra = arith.parse_extra(fh.read())
        except (OSError, ValueError) as exc:
            raise UsageError(f"{args.extra}: {exc}") from None
    header = ["n", "p", "cong_mod_p", "phall_solvable", "mhall_product", "witness",
              "frobenius_class", "status"]
    rows = []
    for v in arith.candidate_scan(p, args.max, extra):
        witness = "-" if v.witness is None else "*".join(map(str, v.witness)) or "1"
        rows.append([v.n, v.p, v.cong_mod_p, v.phall_solvable, v.mhall_product, witness,
                     v.frobenius_class.value, v.status.value])
    out.write(format_table(header, rows, args.tsv))
    return 0


def cmd_prove(args, out) -> int:
    if args.p < 2 or args.n < 1:
        raise UsageError("--p and --n must be positive")
    trace = prove(args.p, args.n)
    out.write(trace.text())
    problems = validate_trace(trace)
    for msg in problems:
        print(f"trace check: {msg}", file=sys.stderr)
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS,
                        help="tab-separated output with a header row")
    common.add_argument("--cap-elements", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="largest group whose elements may be listed")
    common.add_argument("--cap-orbit", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="largest orbit that may be enumerated")

    parser = argparse.ArgumentParser(prog="sylowbench", description=__doc__.splitlines()[0])
    defaults = Caps()
    parser.add_argument("--tsv", action="store_true")
    parser.add_argument("--cap-elements", type=int, default=defaults.elements, metavar="N")
    parser.add_argument("--cap-orbit", type=int, default=defaults.orbit, metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="basic data about a group")
    p.add_argument("group", help="builtin:<spec>, file:<path>:<name> or a catalog name")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sylow", parents=[common], help="Sylow counts and normalizers")
    p.add_argument("group")
    p.add_argument("--p", type=int, help="prime (default: every prime dividing |G|)")
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("lemmas", parents=[common], help="run lemma checks over the catalog")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-order", type=int, default=None, metavar="M")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("scan", parents=[common], help="filter candidate Sylow numbers")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--extra", metavar="FILE", help="extra Sylow numbers, one per line")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("prove", parents=[common], help="try to refute n Sylow p-subgroups")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("selftest", parents=[common], help="run every invariant suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap_elements < 1 or args.cap_orbit < 1:
        parser.error("caps must be positive")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sylowbench: error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"sylowbench: cap exceeded: {exc}", file=sys.stderr)
        return 2
    except SylowBenchError as exc:
        print(f"sylowbench: error: {exc}", file=sys.stderr)
        return 2
