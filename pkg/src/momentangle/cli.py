"""Command-line interface. Output is JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from . import asphericity, coxeter, davis, polyprod
from .catalog import catalog
from .cellcx import euler_characteristic
from .errors import CapacityError, DomainError, InputError, StructureError
from .homology import hochster_cross_check, homology
from .simplicial import (SimplicialComplex, flag_witness, format_scx, is_sphere_triangulation,
                         read_scx)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def load_complex(source: str) -> SimplicialComplex:
    if source.startswith("@"):
        return catalog(source[1:])
    try:
        return read_scx(source)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def _emit(payload: object) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def cmd_flag(args) -> int:
    K = load_complex(args.input)
    w = flag_witness(K)
    _emit({"flag": w is None, "witness": list(w.missing_face) if w else None})
    return EXIT_OK if w is None else EXIT_NEGATIVE


def cmd_aspherical(args) -> int:
    K = load_complex(args.input)
    verdict = asphericity.davis_criterion(K, asphericity.builtin_pair(args.pair))
    _emit(verdict.to_json())
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _build(K: SimplicialComplex, pair: str):
    if pair == "real":
        return polyprod.build_rk(K)
    return polyprod.build_polyhedral_product(K, polyprod.builtin_pair_model(pair))


def cmd_rk(args) -> int:
    K = load_complex(args.input)
    C = _build(K, args.pair)
    if args.action == "build":
        _emit(C.to_json())
    elif args.action == "homology":
        _emit(homology(C, args.coeffs).to_json())
    else:
        payload = {"euler": euler_characteristic(C)}
        if args.pair == "real":
            payload["formula"] = polyprod.euler_formula(K)
        _emit(payload)
    return EXIT_OK


def cmd_npc(args) -> int:
    K = load_complex(args.input)
    cert = davis.npc_certificate(K, args.radius)
    _emit(cert.to_json())
    return EXIT_OK if cert else EXIT_NEGATIVE


def cmd_racg(args) -> int:
    K = load_complex(args.input)
    P = coxeter.racg_from_complex(K)
    if args.action == "nf":
        if args.word is None:
            raise InputError("racg nf needs --word")
        nf = coxeter.normal_form(P, coxeter.parse_word(args.word))
        _emit({"normal_form": str(nf), "length": nf.length,
               "sign": list(coxeter.lambda_map(nf, P.m))})
    elif args.action == "ball":
        _emit({"radius": args.radius,
               "spheres": [[str(x) for x in s] for s in coxeter.ball(P, args.radius)]})
    else:
        _emit({"radius": args.radius, "sphere_sizes": coxeter.sphere_sizes(P, args.radius)})
    return EXIT_OK


def cmd_davis(args) -> int:
    K = load_complex(args.input)
    if args.action == "ball":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            U = davis.davis_ball(K, args.radius)
        payload = U.complex.to_json()
        payload["interior"] = sorted(U.interior)
        payload["chambers"] = len(U.chambers)
        _emit(payload)
        return EXIT_OK
    report = davis.covering_check(K, args.radius)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_sphere(args) -> int:
    K = load_complex(args.input)
    v = is_sphere_triangulation(K)
    _emit({"verdict": v.verdict.value, "tier": v.tier.value, "reason": v.reason})
    return EXIT_OK if v else EXIT_NEGATIVE


def cmd_hochster(args) -> int:
    K = load_complex(args.input)
    report = hochster_cross_check(K)
    _emit({"agrees": report.agrees,
           "degrees": [{"d": r.d, "direct": r.direct, "splitting": r.splitting} for r in report.rows]})
    return EXIT_OK if report.agrees else EXIT_NEGATIVE


def cmd_catalog(args) -> int:
    K = catalog(args.name)
    if args.scx:
        sys.stdout.write(format_scx(K))
    else:
        _emit({"name": args.name, "vertices": K.vertex_count,
               "facets": [list(f) for f in K.facets] if not K.is_empty else []})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentangle",
        description="Real moment-angle complexes, flagness, right-angled Coxeter groups "
                    "and Davis complexes. <in> is a .scx path or @catalog-name.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flag", help="decide flagness")
    p.add_argument("input")
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser("aspherical", help="Davis' asphericity criterion")
    p.add_argument("input")
    p.add_argument("--pair", choices=["real", "complex", "quaternionic"], default="real")
    p.set_defaults(func=cmd_aspherical)

    p = sub.add_parser("rk", help="build the polyhedral product and compute invariants")
    p.add_argument("action", choices=["build", "homology", "euler"])
    p.add_argument("input")
    p.add_argument("--pair", choices=["real", "complex", "quaternionic"], default="real")
    p.add_argument("--coeffs", choices=["Z", "Z2"], default="Z")
    p.set_defaults(func=cmd_rk)

    p = sub.add_parser("npc", help="nonpositive-curvature certificate")
    p.add_argument("input")
    p.add_argument("--radius", type=int, default=2)
    p.set_defaults(func=cmd_npc)

    p = sub.add_parser("racg", help="right-angled Coxeter group of the 1-skeleton")
    p.add_argument("action", choices=["nf", "ball", "growth"])
    p.add_argument("input")
    p.add_argument("--word", help="comma-separated generators, or e")
    p.add_argument("--radius", type=int, default=4)
    p.set_defaults(func=cmd_racg)

    p = sub.add_parser("davis", help="finite Davis complex balls and the covering check")
    p.add_argument("action", choices=["ball", "cover"])
    p.add_argument("input")
    p.add_argument("--radius", type=int, default=2)
    p.set_defaults(func=cmd_davis)

    p = sub.add_parser("sphere-check", help="recognize sphere triangulations")
    p.add_argument("input")
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("hochster", help="mod-2 homology cross-check via full subcomplexes")
    p.add_argument("input")
    p.set_defaults(func=cmd_hochster)

    p = sub.add_parser("catalog", help="print a named fixture complex")
    p.add_argument("name")
    p.add_argument("--scx", action="store_true", help="print in .scx format instead of JSON")
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, DomainError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
