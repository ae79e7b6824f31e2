"""Command line front end: enumerate models, print invariants, apply the
bijections, and run the verification battery.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import associahedron, cubeahedron, multiplihedron, trees
from .poset import f_vector, poset_to_json, to_dot

# model name -> (builder, minimum n, default size cap)
_MODELS = {
    "k": (associahedron.build_K, 2, 8),
    "j": (multiplihedron.build_Jtree, 1, 5),
    "jprime": (multiplihedron.build_Jprime, 1, 6),
    "cp": (cubeahedron.build_CP, 1, 5),
}


def _build_model(args, parser):
    builder, lo, cap = _MODELS[args.model]
    if args.n < lo:
        parser.error(f"model {args.model} needs n >= {lo}")
    if args.n > cap:
        if not args.force:
            parser.error(
                f"n = {args.n} exceeds the cap {cap} for model {args.model} "
                "(pass --force to run anyway)"
            )
        print(
            f"warning: n = {args.n} above cap {cap}, this may take a while",
            file=sys.stderr,
        )
    return builder(args.n)


def _emit(text, args):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args, parser):
    P = _build_model(args, parser)
    if args.format == "json":
        _emit(poset_to_json(P) + "\n", args)
    elif args.format == "dot":
        _emit(to_dot(P, name=f"{args.model}{args.n}"), args)
    else:
        _emit("".join(f"{P.rank[x]} {x}\n" for x in P.elements), args)
    return 0


def cmd_fvector(args, parser):
    P = _build_model(args, parser)
    fv = f_vector(P)
    if args.format == "json":
        _emit(json.dumps({"model": args.model, "n": args.n, "f": list(fv)}) + "\n", args)
    elif args.format == "csv":
        _emit(",".join(map(str, fv)) + "\n", args)
    else:
        _emit(" ".join(map(str, fv)) + "\n", args)
    return 0


def cmd_coords(args, parser):
    if args.n < 2:
        parser.error("coordinates need n >= 2")
    if args.n > 8 and not args.force:
        parser.error("n > 8 needs --force")
    points = associahedron.loday_realization(args.n)
    if args.format == "json":
        data = [
            {"tree": trees.to_sexpr(t), "point": list(pt)} for t, pt in points
        ]
        _emit(json.dumps(data) + "\n", args)
    elif args.format == "csv":
        _emit("".join(",".join(map(str, pt)) + "\n" for _, pt in points), args)
    else:
        _emit(
            "".join(
                f"{trees.to_sexpr(t)} {' '.join(map(str, pt))}\n" for t, pt in points
            ),
            args,
        )
    return 0


def cmd_map(args, parser):
    try:
        if args.name == "phi":
            t = multiplihedron.parse_painted_sexpr(args.input)
            out = multiplihedron.expr_text(multiplihedron.Phi(t))
        elif args.name == "phiprime":
            e = multiplihedron.parse_flat_expression(args.input)
            out = multiplihedron.phi_map(e).text
        elif args.name == "tubing":
            n, u = cubeahedron.tubing_from_json(args.input)
            out = multiplihedron.expr_text(cubeahedron.tubing_to_expression(n, u))
        else:  # composed
            n, u = cubeahedron.tubing_from_json(args.input)
            out = multiplihedron.phi_map(cubeahedron.tubing_to_expression(n, u)).text
    except ValueError as exc:
        parser.error(str(exc))
    print(out)
    return 0


def _run_check(name, args, parser):
    reports = []
    if name == "theorem_a":
        for n in _range_or(args, 3, 6):
            reports.append(associahedron.verify_theorem_A(n))
    elif name == "q":
        if args.p and args.q:
            pairs = [(args.p, args.q)]
        else:
            pairs = [
                (p, q) for p in range(2, 7) for q in range(2, 7) if p + q <= 8
            ]
        for p, q in pairs:
            reports.append(associahedron.verify_Q(p, q))
    elif name == "loday":
        for n in _range_or(args, 2, 6):
            reports.append(associahedron.verify_loday(n, check_extreme=n <= 6))
    elif name == "identities":
        reports.append(associahedron.verify_operator_identities())
    elif name == "phi":
        for n in _range_or(args, 1, 4):
            reports.append(multiplihedron.verify_Phi(n))
    elif name == "phiprime":
        for n in _range_or(args, 1, 5):
            reports.append(multiplihedron.verify_phi(n))
    elif name == "cubeahedron":
        for n in _range_or(args, 1, 4):
            reports.append(cubeahedron.verify_cubeahedron_iso(n))
    elif name == "composed":
        for n in _range_or(args, 1, 4):
            reports.append(cubeahedron.verify_composed(n))
    else:
        parser.error(f"unknown check {name!r}")
    return reports


def _range_or(args, lo, hi):
    return [args.n] if args.n else range(lo, hi + 1)


_CHECKS = (
    "theorem_a",
    "q",
    "loday",
    "identities",
    "phi",
    "phiprime",
    "cubeahedron",
    "composed",
)


def cmd_verify(args, parser):
    names = _CHECKS if args.check == "all" else (args.check,)
    reports = []
    for name in names:
        reports.extend(_run_check(name, args, parser))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps([json.loads(r.to_json()) for r in reports]))
    else:
        for r in reports:
            sizes = [v for k, v in sorted(r.counts.items()) if k.endswith("s")]
            if len(sizes) == 2:
                sep = "=" if sizes[0] == sizes[1] else "vs"
                print(f"{r.summary()}  ({sizes[0]} {sep} {sizes[1]})")
            else:
                print(r.summary())
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="assocmodels",
        description="Enumerate and cross-check combinatorial models of the "
        "associahedron, multiplihedron, and path cubeahedron.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_opts(p):
        p.add_argument("--model", choices=sorted(_MODELS), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--force", action="store_true", help="ignore size caps")
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("enumerate", help="list the faces of a model")
    add_model_opts(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fvector", help="face counts by dimension")
    add_model_opts(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("coords", help="integer vertex coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("map", help="apply one of the bijections to an element")
    p.add_argument(
        "--name", choices=("phi", "phiprime", "tubing", "composed"), required=True
    )
    p.add_argument(
        "--input",
        required=True,
        help="painted tree s-expression, flat expression, or tubing JSON",
    )
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run the machine checks")
    p.add_argument("--check", choices=_CHECKS + ("all",), default="all")
    p.add_argument("--n", type=int, help="restrict an n-indexed check to one n")
    p.add_argument("--p", type=int, help="left factor size for the product check")
    p.add_argument("--q", type=int, help="right factor size for the product check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
