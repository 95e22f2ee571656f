"""Command-line interface wiring all modules together.

Exit status: 0 success, 1 verification failure, 2 parameter error,
3 resource-cap error.  Randomized subcommands default to a fixed seed
(DEFAULT_SEED), never the clock, so repeated runs are byte-identical;
the effective seed is recorded in every output header.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bounds as bounds_mod
from .cliques import DEFAULT_NODE_CAP, max_monochromatic_clique
from .coloring import ConstructionParams, EdgeColoring, build_field_coloring, build_paley, build_two_color
from .compose import blowup_product
from .errors import ParameterError, ResourceCapError
from .field import PrimeModulus, is_prime
from .isotropic import DEFAULT_ENUM_CAP, enumerate_isotropic, sample_distinct
from .moment import (
    CERTIFICATE_MAGIC,
    WitnessSearchFailure,
    certificate_from_text,
    certificate_to_text,
    find_witness,
    reverify_text,
)
from .rng import derive_seed, make_rng

DEFAULT_SEED = 271828


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _enum_cap(args) -> int:
    return args.cap if args.cap is not None else DEFAULT_ENUM_CAP


def _node_cap(args) -> int:
    return args.cap if args.cap is not None else DEFAULT_NODE_CAP


def _cmd_enumerate(args) -> int:
    ground = enumerate_isotropic(PrimeModulus(args.q), args.t, cap=_enum_cap(args))
    text = "".join(v.text_form() + "\n" for v in ground.vectors)
    _write(text, args.out)
    if args.out:
        print(f"enumerate: q={args.q} t={args.t} count={len(ground)} out={args.out}")
    return 0


def _cmd_construct(args) -> int:
    modulus = PrimeModulus(args.q)
    ground = enumerate_isotropic(modulus, args.t, cap=_enum_cap(args))
    verts = sample_distinct(ground, args.n, make_rng(derive_seed(args.seed, "construct-sample")))
    coloring = build_field_coloring(ConstructionParams(modulus, args.t, args.seed, args.n), verts)
    _write(coloring.to_text(), args.out)
    if args.out:
        print(f"construct: seed={args.seed} q={args.q} t={args.t} n={args.n} out={args.out}")
    return 0


def _cmd_construct_two_color(args) -> int:
    coloring = build_two_color(args.t, args.n, args.seed)
    _write(coloring.to_text(), args.out)
    if args.out:
        print(f"construct-two-color: seed={args.seed} t={args.t} n={args.n} out={args.out}")
    return 0


def _cmd_construct_paley(args) -> int:
    coloring = build_paley(args.p)
    _write(coloring.to_text(), args.out)
    if args.out:
        print(f"construct-paley: p={args.p} out={args.out}")
    return 0


def _cmd_verify(args) -> int:
    text = _read(args.coloring)
    if text.startswith(CERTIFICATE_MAGIC):
        coloring = EdgeColoring.from_text(certificate_from_text(text).coloring_text)
    else:
        coloring = EdgeColoring.from_text(text)
    cap = _node_cap(args)
    found = False
    if args.csv:
        print("color,size,witness")
    for color in range(1, coloring.num_colors + 1):
        w = max_monochromatic_clique(coloring, color, cap=cap)
        verts = " ".join(str(v) for v in w.vertices)
        if args.csv:
            print(f"{color},{w.size},{verts}")
        else:
            print(f"color {color}: max clique {w.size}, witness {verts}")
        if w.size >= args.target:
            found = True
    if not args.csv:
        verdict = "found" if found else "none"
        print(f"monochromatic clique of size >= {args.target}: {verdict}")
    return 1 if found else 0


def _cmd_certify(args) -> int:
    result = find_witness(
        args.q,
        args.t,
        args.n,
        args.attempts,
        args.seed,
        jobs=args.jobs,
        node_cap=_node_cap(args),
    )
    if isinstance(result, WitnessSearchFailure):
        print(f"certify: seed={args.seed} no witness within {args.attempts} attempts")
        for f in result.failures[:10]:
            print(f"  attempt {f.attempt}: color {f.color} has a clique of size {f.clique_size}")
        if len(result.failures) > 10:
            print(f"  ... and {len(result.failures) - 10} more attempts")
        return 1
    _write(certificate_to_text(result), args.out)
    sizes = " ".join(str(s) for s in result.max_clique_sizes)
    if args.out:
        print(
            f"certify: seed={args.seed} attempt={result.attempt} "
            f"max-clique-sizes={sizes} out={args.out}"
        )
    return 0


def _cmd_reverify(args) -> int:
    ok = reverify_text(_read(args.cert))
    print("certificate valid" if ok else "certificate INVALID")
    return 0 if ok else 1


def _cmd_compose(args) -> int:
    product = blowup_product(EdgeColoring.from_text(_read(args.a)), EdgeColoring.from_text(_read(args.b)))
    _write(product.to_text(), args.out)
    if args.out:
        print(f"compose: n={product.n} colors={product.num_colors} out={args.out}")
    return 0


def _cmd_bounds(args) -> int:
    t, colors = args.t, args.colors
    records = [bounds_mod.baseline_bound(t, colors)]
    if colors >= 3:
        records.append(bounds_mod.new_bound(t, colors, args.slack))
        if colors >= 5 and is_prime(colors - 1):
            records.append(bounds_mod.field_bound(t, colors - 1, args.slack))
    value_cap = 10**60
    rows = []
    for rec in records:
        value = str(rec.value) if rec.value <= value_cap else "-"
        rows.append((rec.tag, value, f"{rec.log2_value:.6f}", f"{bounds_mod.growth_rate(rec):.6f}"))
    if args.csv:
        print("tag,value,log2,growth")
        for row in rows:
            print(",".join(row))
    else:
        print(f"# lower bounds at t={t} colors={colors} slack={args.slack}")
        print("# slack 0 omits the lower-order term, so values are conservative")
        for tag, value, log2v, rate in rows:
            print(f"{tag:20s} value={value} log2={log2v} growth={rate}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseylb",
        description="Construct, verify and tabulate multicolor Ramsey lower-bound instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, seed=False, jobs=False, csv=False):
        sp.add_argument("--out", type=str, default=None, help="output file (default stdout)")
        sp.add_argument("--cap", type=int, default=None, help="enumeration/search node cap")
        if seed:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                            help=f"PRNG seed (default {DEFAULT_SEED})")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="parallel attempts")
        if csv:
            sp.add_argument("--csv", action="store_true", help="machine-readable output")

    sp = sub.add_parser("enumerate", help="list the self-orthogonal vectors of F_q^t")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("construct", help="build the (q+1)-coloring on sampled vectors")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp, seed=True)
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("construct-two-color", help="two-coloring of sampled binary vectors")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp, seed=True)
    sp.set_defaults(func=_cmd_construct_two_color)

    sp = sub.add_parser("construct-paley", help="quadratic-residue two-coloring on F_p")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_construct_paley)

    sp = sub.add_parser("verify", help="exact per-color max clique of a coloring file")
    sp.add_argument("--coloring", type=str, required=True)
    sp.add_argument("--target", type=int, required=True,
                    help="exit 1 when any color reaches a clique of this size")
    common(sp, csv=True)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("certify", help="search for a witness coloring and emit a certificate")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--attempts", type=int, default=200)
    common(sp, seed=True, jobs=True)
    sp.set_defaults(func=_cmd_certify)

    sp = sub.add_parser("reverify", help="re-check a certificate from its stored fields")
    sp.add_argument("--cert", type=str, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_reverify)

    sp = sub.add_parser("compose", help="blow-up product of two coloring files")
    sp.add_argument("--a", type=str, required=True)
    sp.add_argument("--b", type=str, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_compose)

    sp = sub.add_parser("bounds", help="exact lower-bound table at (t, colors)")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--slack", type=str, default="0",
                    help="rational stand-in for the lower-order exponent term")
    common(sp, csv=True)
    sp.set_defaults(func=_cmd_bounds)

    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
