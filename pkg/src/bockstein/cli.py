"""Command-line front end.

Exit codes: 0 success, 1 a nonzero Bockstein was found under ``--expect-zero``,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .cohomology import bockstein, format_group, integral_cohomology, mod_cohomology
from .generators import from_spec
from .simplicial import SimplicialComplex
from .stanley_reisner import (
    bockstein_prime_sweep,
    hochster_table,
    local_bockstein_is_zero,
    sr_ideal,
)


class InputError(Exception):
    pass


def load_complex(args) -> SimplicialComplex:
    if args.generate is not None:
        try:
            return from_spec(args.generate)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.input} is not valid JSON: {exc}") from exc
    try:
        return SimplicialComplex.from_json(obj)
    except ValueError as exc:
        raise InputError(f"{args.input}: {exc}") from exc


def _parse_tau(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted(int(v) for v in text.split(",")))
    except ValueError as exc:
        raise InputError(f"bad face {text!r}") from exc


def _need_modulus(ell: int):
    if ell < 2:
        raise InputError(f"modulus must be >= 2, got {ell}")


def _emit(fmt: str, payload: Any, header: Sequence[str], rows: Sequence[Sequence[Any]], pretty: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "tsv":
        print("\t".join(header))
        for r in rows:
            print("\t".join(str(x) for x in r))
    else:
        print(pretty)


def cmd_cohomology(args) -> int:
    cx = load_complex(args)
    want_int = args.int or args.mod is None
    if args.mod is not None:
        _need_modulus(args.mod)
    out, rows, lines = [], [], []
    for k in range(-1, cx.dim + 1):
        entry: dict[str, Any] = {"degree": k}
        row: list[Any] = [k]
        text = f"H~^{k}:"
        if want_int:
            h = integral_cohomology(cx, k)
            entry["integral"] = {"free_rank": h.free_rank, "torsion": list(h.invariant_factors)}
            row.append(str(h))
            text += f"  Z-coeff {h}"
        if args.mod is not None:
            hm = mod_cohomology(cx, k, args.mod)
            entry["mod"] = {"modulus": args.mod, "orders": list(hm.orders)}
            row.append(str(hm))
            text += f"  Z/{args.mod}-coeff {hm}"
        out.append(entry)
        rows.append(row)
        lines.append(text)
    header = ["degree"] + (["integral"] if want_int else []) + ([f"mod_{args.mod}"] if args.mod else [])
    _emit(args.format, out, header, rows, "\n".join(lines))
    return 0


def cmd_bockstein(args) -> int:
    cx = load_complex(args)
    _need_modulus(args.mod)
    b = bockstein(cx, args.k, args.mod)
    payload = {
        "k": args.k,
        "modulus": args.mod,
        "source_orders": list(b.source.orders),
        "target_orders": list(b.target.orders),
        "matrix": [list(r) for r in b.matrix],
        "is_zero": b.is_zero,
        "rank": b.rank,
    }
    pretty = (
        f"beta: H~^{args.k}(Z/{args.mod}) = {b.source} -> H~^{args.k + 1}(Z/{args.mod}) = {b.target}\n"
        f"matrix: {[list(r) for r in b.matrix]}\n"
        f"{'zero' if b.is_zero else 'NONZERO'}" + (f", rank {b.rank}" if b.rank is not None else "")
    )
    _emit(args.format, payload, ["k", "modulus", "is_zero", "rank"],
          [[args.k, args.mod, b.is_zero, b.rank]], pretty)
    return 1 if args.expect_zero and not b.is_zero else 0


def cmd_local_bockstein(args) -> int:
    cx = load_complex(args)
    try:
        rep = local_bockstein_is_zero(cx, args.mod, args.k, workers=args.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    lines = [
        f"H^{args.k}_a(R/{args.mod}R) -> H^{args.k + 1}_a(R/{args.mod}R): "
        + ("zero" if rep.is_zero else "NONZERO")
    ]
    for w in rep.witnesses:
        lines.append(f"  witness tau={list(w.tau)} link degree {w.link_degree}")
    if rep.prime_power_analogue:
        lines.append("  (prime-power modulus: unproved analogue of the prime case)")
    elif not rep.is_zero:
        lines.append(f"  => {rep.torsion_certificate()}")
    rows = [[args.k, args.mod, rep.is_zero, ",".join(map(str, w.tau)), w.link_degree] for w in rep.witnesses]
    if not rows:
        rows = [[args.k, args.mod, rep.is_zero, "", ""]]
    _emit(args.format, rep.to_json(), ["k", "modulus", "is_zero", "tau", "link_degree"], rows, "\n".join(lines))
    return 1 if args.expect_zero and not rep.is_zero else 0


def cmd_sr_ideal(args) -> int:
    cx = load_complex(args)
    try:
        ideal = sr_ideal(cx)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    pretty = "(" + ", ".join(ideal.monomials()) + ")" if ideal.generators else "(0)"
    _emit(args.format, ideal.to_json(), ["generator"],
          [[",".join(map(str, g))] for g in ideal.generators], pretty)
    return 0


def cmd_hochster(args) -> int:
    cx = load_complex(args)
    _need_modulus(args.mod)
    taus = None if args.tau is None else [_parse_tau(args.tau)]
    table = hochster_table(cx, args.mod, args.k, taus)
    lines = [f"[H^{args.k}_n(R/(a+{args.mod}R))]_u by support of u:"]
    for r in table.rows:
        lines.append(f"  tau={list(r.tau)}  H~^{r.link_degree}(link; Z/{args.mod}) = {format_group(0, r.orders)}")
    rows = [[",".join(map(str, r.tau)), r.link_degree, ",".join(map(str, r.orders))] for r in table.rows]
    _emit(args.format, table.to_json(), ["tau", "link_degree", "orders"], rows, "\n".join(lines))
    return 0


def cmd_prime_sweep(args) -> int:
    cx = load_complex(args)
    try:
        primes = bockstein_prime_sweep(cx, args.k, workers=args.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    pretty = f"nonzero Bockstein H^{args.k}_a(R/pR) -> H^{args.k + 1}_a(R/pR) for p in {{{', '.join(map(str, primes))}}}"
    if primes:
        pretty += f"\n  => H^{args.k + 1}_a(R) has p-torsion for each listed p"
    _emit(args.format, {"k": args.k, "primes": primes}, ["prime"], [[p] for p in primes], pretty)
    return 1 if args.expect_zero and primes else 0


def cmd_generate(args) -> int:
    try:
        cx = from_spec(args.spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(json.dumps(cx.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bockstein",
        description="Bockstein homomorphisms on simplicial and local cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("input", nargs="?", help="complex JSON file")
    src.add_argument("--generate", metavar="SPEC",
                     help="built-in complex: rp2, dunce:m[,q], cycle:n, simplex-boundary:n, "
                          "simplex:n, random:n,d,density,seed")
    common.add_argument("--format", choices=["pretty", "json", "tsv"], default="pretty")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")

    p = sub.add_parser("cohomology", parents=[common], help="reduced cohomology table")
    p.add_argument("--int", action="store_true", help="integer coefficients (default)")
    p.add_argument("--mod", type=int, metavar="ELL", help="Z/ELL coefficients")
    p.set_defaults(func=cmd_cohomology)

    for name, func, helptext in [
        ("bockstein", cmd_bockstein, "simplicial Bockstein H~^k -> H~^(k+1)"),
        ("local-bockstein", cmd_local_bockstein, "Bockstein H^k_a(R/ell R) -> H^(k+1)_a(R/ell R)"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("-k", type=int, required=True)
        p.add_argument("--mod", type=int, required=True, metavar="ELL")
        p.add_argument("--expect-zero", action="store_true", help="exit 1 if the map is nonzero")
        p.set_defaults(func=func)

    p = sub.add_parser("sr-ideal", parents=[common], help="Stanley-Reisner ideal generators")
    p.set_defaults(func=cmd_sr_ideal)

    p = sub.add_parser("hochster", parents=[common], help="Hochster table of graded local cohomology")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mod", type=int, required=True, metavar="ELL")
    p.add_argument("--tau", help="comma-separated face; empty string for the empty face")
    p.set_defaults(func=cmd_hochster)

    p = sub.add_parser("prime-sweep", parents=[common], help="primes with nonzero local Bockstein")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--expect-zero", action="store_true", help="exit 1 if any prime is found")
    p.set_defaults(func=cmd_prime_sweep)

    p = sub.add_parser("generate", help="emit a built-in complex as JSON")
    p.add_argument("spec")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("bockstein: error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"bockstein: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
