"""``omcube`` command line.

Every command writes JSON to stdout and diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 input error, 3 search budget ran out.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import codec
from .extensions import adjoint_to_cube, cube_dimension, cube_to_adjoint, is_adjoint, is_localization, is_oriented_cube
from .generators import canonical_adjoint, cross_polytope, cross_polytope_plus_zero, real_cube
from .linalg import frac_str
from .om import OMError, check_orthogonality, validate_circuit_axioms
from .realization import RealizationError, center, edge_meeting_point, om_from_points, projective_map

OK, FAILED, INPUT_ERROR, TRUNCATED = 0, 1, 2, 3

GENERATORS = {
    "cross-polytope": cross_polytope,
    "cross-polytope-plus-zero": cross_polytope_plus_zero,
    "cube": real_cube,
    "adjoint": canonical_adjoint,
}


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _emit(obj) -> None:
    if isinstance(obj, bytes):
        sys.stdout.write(obj.decode("utf-8"))
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _check_json(ok: bool, failures: list[str], **extra) -> int:
    _emit({"ok": ok, "failures": failures, **extra})
    return OK if ok else FAILED


# -- commands ------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        om = GENERATORS[args.kind](args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(codec.write_om(om))
    return OK


def cmd_check(args) -> int:
    om = codec.read_om(_read(args.file))
    if args.what == "om":
        failures = validate_circuit_axioms(om.circuit_pairs, om.ground, om.cocircuit_pairs)
        failures += [f"orthogonality: {x!r} against {y!r}" for x, y in check_orthogonality(om)]
        return _check_json(not failures, failures)
    if args.what == "cube":
        rep = is_oriented_cube(om)
        return _check_json(bool(rep), rep.failures)
    if args.what == "adjoint":
        n = args.n if args.n is not None else cube_dimension(om.labels)
        rep = is_adjoint(om, n, args.mode)
        return _check_json(bool(rep), rep.failures, mode=args.mode)
    if not args.localization:
        raise InputError("check localization needs --localization FILE")
    loc = codec.read_localization(_read(args.localization), om)
    rep = is_localization(loc)
    return _check_json(bool(rep), rep.failures, disagreements=rep.disagreements)


def cmd_map(args) -> int:
    om = codec.read_om(_read(args.file))
    try:
        out = cube_to_adjoint(om) if args.direction == "cube-to-adjoint" else adjoint_to_cube(om)
    except (OMError, AssertionError) as exc:
        print(f"omcube: {exc}", file=sys.stderr)
        return FAILED
    _emit(codec.write_om(out))
    return OK


def cmd_realize(args) -> int:
    _emit(codec.write_om(om_from_points(codec.read_config(_read(args.file)))))
    return OK


def cmd_transform(args) -> int:
    config = codec.read_config(_read(args.file))
    matrix = codec.read_matrix(_read(args.matrix))
    _emit(codec.write_config(projective_map(config, matrix, allow_reorientation=args.allow_reorientation)))
    return OK


def cmd_center(args) -> int:
    o = center(codec.read_config(_read(args.file)))
    _emit({"center": [frac_str(x) for x in o]})
    return OK


def cmd_meet(args) -> int:
    p = edge_meeting_point(codec.read_config(_read(args.file)), args.dir)
    _emit({"label": p.label, "coords": [frac_str(x) for x in p.coords], "at_infinity": p.at_infinity})
    return OK


def cmd_verify(args) -> int:
    from .verify import REGISTRY, verify_suite

    if args.claim:
        unknown = [c for c in args.claim if c not in REGISTRY]
        if unknown:
            raise InputError(f"unknown claim(s): {', '.join(unknown)}")
    report = verify_suite(args.n, args.claim)
    for r in report.results:
        print(f"{r.status:4}  {r.claim}  ({r.seconds}s)", file=sys.stderr)
    _emit(report.to_json())
    return OK if report.ok else FAILED


def cmd_search(args) -> int:
    from . import search

    try:
        if args.kind == "orientations":
            rep = search.search_orientations(args.n, args.budget)
        elif args.kind == "cubes":
            rep = search.search_cubes(args.n, args.strategy, args.budget, args.checkpoint, args.checkpoint_every)
        else:
            rep = search.search_adjoints(args.n, args.strategy, args.budget, args.checkpoint, args.checkpoint_every)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(rep.to_json())
    if rep.completeness_flag == "budget-truncated":
        print("omcube: search budget exhausted; results are partial", file=sys.stderr)
        return TRUNCATED
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omcube", description="Oriented cubes, cross-polytopes and their adjoints.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print a named oriented matroid")
    g.add_argument("kind", choices=sorted(GENERATORS))
    g.add_argument("n", type=int)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test an oriented matroid file")
    c.add_argument("what", choices=["om", "cube", "adjoint", "localization"])
    c.add_argument("file")
    c.add_argument("--n", type=int, help="dimension for the adjoint check (default: from the labels)")
    c.add_argument("--mode", choices=["weak", "strong"], default="weak")
    c.add_argument("--localization", help="localization JSON over the base in FILE")
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("map", help="cube <-> adjoint bijection")
    m.add_argument("direction", choices=["cube-to-adjoint", "adjoint-to-cube"])
    m.add_argument("file")
    m.set_defaults(func=cmd_map)

    r = sub.add_parser("realize", help="oriented matroid of a point configuration")
    r.add_argument("file")
    r.set_defaults(func=cmd_realize)

    t = sub.add_parser("transform", help="apply a projective map to a configuration")
    t.add_argument("file")
    t.add_argument("--matrix", required=True, help="JSON (d+1)x(d+1) matrix of rationals")
    t.add_argument("--allow-reorientation", action="store_true")
    t.set_defaults(func=cmd_transform)

    ce = sub.add_parser("center", help="common point of the cube diagonals")
    ce.add_argument("file")
    ce.set_defaults(func=cmd_center)

    me = sub.add_parser("meet", help="meeting point of the edges in one direction")
    me.add_argument("file")
    me.add_argument("--dir", type=int, required=True)
    me.set_defaults(func=cmd_meet)

    v = sub.add_parser("verify", help="run the registered claim suite")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--claim", action="append", help="run only this claim (repeatable)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="enumerate oriented cubes, adjoints or cube orientations")
    s.add_argument("kind", choices=["cubes", "adjoints", "orientations"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--strategy", choices=["exhaustive", "pruned"], default="exhaustive")
    s.add_argument("--budget", type=float, default=60.0, help="seconds")
    s.add_argument("--checkpoint", help="state file; resumed if it exists")
    s.add_argument("--checkpoint-every", type=float, default=30.0, help="seconds between saves")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", codec.NonCanonicalWarning)
        try:
            code = args.func(args)
        except (InputError, codec.CodecError, RealizationError, OMError) as exc:
            print(f"omcube: {exc}", file=sys.stderr)
            code = INPUT_ERROR
    for w in caught:
        print(f"omcube: warning: {w.message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
