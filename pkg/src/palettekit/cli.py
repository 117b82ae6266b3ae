"""Command-line interface.

Exit codes: 0 and 1 carry the answer of a yes/no subcommand (a homomorphism
or coloring exists / does not), 2 signals a usage, parse or internal error.
"""

from __future__ import annotations

import argparse
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import coloring, conditions, fileio, homomorphism, palette
from .lagrangian import lagrangian as maximize_cubic


def format_decimal(x) -> str:
    """12 significant digits, round half to even, never in exponent notation."""
    fr = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(fr.numerator) / Decimal(fr.denominator)
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _cmd_density(args) -> int:
    p = fileio.load_palette(args.palette)
    d = palette.density(p)
    print(f"{d} = {format_decimal(d)}")
    return 0


def _cmd_lagrangian(args) -> int:
    p = fileio.load_palette(args.palette)
    r = maximize_cubic(p, restarts=args.restarts, tol=args.tol, seed=args.seed)
    print(f"value {format_decimal(r.value)}")
    print("argmax " + " ".join(f"{c}={format_decimal(w)}" for c, w in zip(p.colors, r.argmax)))
    print(f"kkt_residual {format_decimal(r.kkt_residual)}")
    return 0


def _cmd_hom(args) -> int:
    src = fileio.load_palette(args.source)
    dst = fileio.load_palette(args.target)
    if args.inv:
        dst = palette.inverse(dst)
    if args.count is not None:
        n = homomorphism.count_homs(src, dst, args.count)
        print(f"count {n}{'+' if n == args.count else ''}")
    f = homomorphism.exists_hom(src, dst)
    if f is None:
        print("none")
        return 1
    for a, b in f.named().items():
        print(f"{a} -> {b}")
    return 0


def _cmd_op(args) -> int:
    ps = [fileio.load_palette(f) for f in args.palettes]
    if args.operation in ("inv", "sym") and len(ps) != 1:
        raise ValueError(f"op {args.operation} takes exactly one palette")
    if args.operation == "inv":
        out = palette.inverse(ps[0])
    elif args.operation == "sym":
        out = palette.symmetrize(ps[0])
    else:
        out = palette.product(ps)
    sys.stdout.write(fileio.format_palette(out))
    return 0


def _print_coloring(order, cert: coloring.PairColoring) -> None:
    print("order " + " ".join(map(str, order)))
    for (u, v), name in cert.named().items():
        print(f"color {u} {v} {name}")


def _cmd_colorable(args) -> int:
    _, h = fileio.load_hypergraph(args.hypergraph)
    p = fileio.load_palette(args.palette)
    if isinstance(h, coloring.OrderedHypergraph):
        cert = coloring.ordered_colorable(h, p, max_vertices=args.max_vertices or coloring.DEFAULT_MAX_ORDERED)
        found = None if cert is None else (h.order, cert)
    else:
        found = coloring.colorable(h, p, max_vertices=args.max_vertices or coloring.DEFAULT_MAX_UNORDERED)
    if found is None:
        print("none")
        return 1
    _print_coloring(*found)
    return 0


def _query(args) -> conditions.SeparationQuery:
    return conditions.SeparationQuery(
        [fileio.load_palette(f) for f in args.pos], [fileio.load_palette(f) for f in args.neg]
    )


def _cmd_separates(args) -> int:
    verdict = conditions.family_condition(_query(args))
    print("separable" if verdict.separable else "not separable")
    for c in verdict.certificates:
        mapping = ", ".join(f"{a}->{b}" for a, b in c.hom.named().items())
        print(f"blocked q={c.q} neg={c.q_prime} {c.direction}: {mapping}")
    return 0 if verdict.separable else 1


def _cmd_witness(args) -> int:
    h = conditions.witness_search(_query(args), args.max_vertices)
    if h is None:
        print("none (bound exhausted)")
        return 1
    sys.stdout.write(fileio.format_hypergraph(h, "witness"))
    return 0


def _cmd_random_hg(args) -> int:
    p = fileio.load_palette(args.palette)
    dist = None if args.dist is None else [float(Fraction(w)) for w in args.dist.split(",")]
    h, _ = coloring.random_palette_hypergraph(p, args.n, dist, args.seed)
    sys.stdout.write(fileio.format_hypergraph(h, f"random_{p.name or 'palette'}_{args.n}_{args.seed}"))
    return 0


def _cmd_verify_481(args) -> int:
    report = conditions.verify_481(spot_checks=args.spot_checks, seed=args.seed)
    print(report.format())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="palettekit", description="Palette calculus for uniform Turan density.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("density", help="exact density of a palette")
    s.add_argument("palette")
    s.set_defaults(func=_cmd_density)

    s = sub.add_parser("lagrangian", help="maximize the palette cubic over the simplex")
    s.add_argument("palette")
    s.add_argument("--restarts", type=int, default=200)
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_lagrangian)

    s = sub.add_parser("hom", help="find a homomorphism between palettes")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--inv", action="store_true", help="map into the inverse of the target")
    s.add_argument("--count", type=int, metavar="LIMIT")
    s.set_defaults(func=_cmd_hom)

    s = sub.add_parser("op", help="inverse, symmetrization or product of palettes")
    s.add_argument("operation", choices=["inv", "sym", "product"])
    s.add_argument("palettes", nargs="+")
    s.set_defaults(func=_cmd_op)

    s = sub.add_parser("colorable", help="decide colorability of a small hypergraph")
    s.add_argument("hypergraph")
    s.add_argument("palette")
    s.add_argument("--max-vertices", type=int)
    s.set_defaults(func=_cmd_colorable)

    for cmd, func in (("separates", _cmd_separates), ("witness", _cmd_witness)):
        s = sub.add_parser(cmd)
        s.add_argument("--pos", nargs="+", required=True)
        s.add_argument("--neg", nargs="+", required=True)
        if cmd == "witness":
            s.add_argument("--max-vertices", type=int, default=5)
        s.set_defaults(func=func)

    s = sub.add_parser("random-hg", help="sample a random palette-colored hypergraph")
    s.add_argument("palette")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--dist", help="comma separated weights, e.g. 2/9,1/3,2/9,2/9")
    s.set_defaults(func=_cmd_random_hg)

    s = sub.add_parser("verify-481", help="run every check behind the 4/81 example")
    s.add_argument("--spot-checks", type=int, default=2000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_verify_481)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure must not look like a verdict
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
