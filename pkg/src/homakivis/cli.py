"""Command-line interface: classify, derive, twist, check and generate.

Exit codes: 0 = evaluated successfully (verdicts are data, not errors),
1 = a morphism/twist precondition failed (witness on stderr),
2 = malformed input or infeasible request.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .akivis import (
    HomAkivisAlgebra,
    NotSkewSymmetric,
    akivis_endomorphism_report,
    associated_hom_akivis,
    check_akivis_morphism,
    hom_jacobi_report,
    hom_malcev_report,
    is_akivis,
    is_hom_akivis,
    twist_by_morphism,
)
from .algebra import (
    HomAlgebra,
    NotMorphism,
    alternative_report,
    check_hom_algebra_morphism,
    flexible_report,
    hom_associator_tensor,
    is_associative,
    is_hom_associative,
    is_multiplicative,
    left_alternative_report,
    nucleus_basis,
    right_alternative_report,
    yau_twist,
)
from .catalog import CATALOG, ZeroParameter
from .formats import (
    KIND_AKIVIS,
    KIND_ALGEBRA,
    AlgebraDoc,
    InputError,
    format_rational,
    parse_algebra_doc,
    parse_map_doc,
    parse_rational,
    serialize_algebra_doc,
    serialize_report,
    witness_json,
)
from .genesis import GenConfig, InfeasibleOrder, random_multiplicative_hom_algebra
from .linear import LinearMap


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fail_morphism(exc: NotMorphism, basis) -> int:
    payload = {"error": "not_a_morphism", "detail": str(exc)}
    if exc.report is not None and exc.report.witness is not None:
        payload["witness"] = witness_json(exc.report.witness, basis)
    print(json.dumps(payload, indent=2), file=sys.stderr)
    return 1


def _algebra_properties(doc: AlgebraDoc) -> list:
    h = HomAlgebra(doc.bilinear, doc.twist, doc.basis)
    identity = LinearMap.identity(doc.dim)
    props = [
        ("associative", is_associative(h)),
        ("hom_associative", is_hom_associative(h)),
        ("multiplicative", is_multiplicative(h)),
        ("hom_flexible", flexible_report(hom_associator_tensor(h))),
        ("hom_alternative", alternative_report(hom_associator_tensor(h))),
    ]
    if doc.bilinear.is_skew():
        props += [
            ("jacobi", hom_jacobi_report(doc.bilinear, identity, prop="jacobi")),
            ("hom_jacobi", hom_jacobi_report(doc.bilinear, doc.twist)),
            ("malcev", hom_malcev_report(doc.bilinear, identity, prop="malcev")),
            ("hom_malcev", hom_malcev_report(doc.bilinear, doc.twist)),
        ]
    return props


def _akivis_properties(doc: AlgebraDoc) -> list:
    k = HomAkivisAlgebra(doc.bilinear, doc.ternary, doc.twist, doc.basis)
    identity = LinearMap.identity(doc.dim)
    t = k.ternary
    return [
        ("hom_akivis", is_hom_akivis(k)),
        ("akivis", is_akivis(k)),
        ("multiplicative", akivis_endomorphism_report(k.bracket, t, k.twist)),
        ("hom_flexible", flexible_report(t)),
        ("hom_alternative", alternative_report(t)),
        ("left_hom_alternative", left_alternative_report(t)),
        ("right_hom_alternative", right_alternative_report(t)),
        ("jacobi", hom_jacobi_report(k.bracket, identity, prop="jacobi")),
        ("hom_jacobi", hom_jacobi_report(k.bracket, k.twist)),
        ("malcev", hom_malcev_report(k.bracket, identity, prop="malcev")),
        ("hom_malcev", hom_malcev_report(k.bracket, k.twist)),
    ]


def cmd_classify(args: argparse.Namespace) -> int:
    text = _read(args.file)
    doc = parse_algebra_doc(text)
    if doc.kind == KIND_ALGEBRA:
        props = _algebra_properties(doc)
    else:
        props = _akivis_properties(doc)
    _emit(serialize_report(props, doc.basis, __version__, _digest(text)), args.out)
    return 0


def cmd_derive(args: argparse.Namespace) -> int:
    doc = parse_algebra_doc(_read(args.file))
    if doc.kind != KIND_ALGEBRA:
        raise InputError("derive expects a file of kind 'algebra'")
    h = HomAlgebra(doc.bilinear, doc.twist, doc.basis)
    k = associated_hom_akivis(h)
    _emit(serialize_algebra_doc(KIND_AKIVIS, k.basis_names, k.bracket,
                                k.ternary, k.twist), args.out)
    return 0


def cmd_twist(args: argparse.Namespace) -> int:
    doc = parse_algebra_doc(_read(args.file))
    mapping = parse_map_doc(_read(args.map))
    if mapping.dim != doc.dim:
        raise InputError(f"map dimension {mapping.dim} does not match algebra "
                         f"dimension {doc.dim}")
    if args.mode == "yau":
        if doc.kind != KIND_ALGEBRA:
            raise InputError("mode 'yau' expects a file of kind 'algebra'")
        try:
            h = yau_twist(doc.bilinear, mapping, doc.basis)
        except NotMorphism as exc:
            return _fail_morphism(exc, doc.basis)
        _emit(serialize_algebra_doc(KIND_ALGEBRA, doc.basis, h.mul,
                                    twist=h.twist), args.out)
    else:
        if doc.kind != KIND_AKIVIS:
            raise InputError("mode 'akivis' expects a file of kind 'akivis'")
        k = HomAkivisAlgebra(doc.bilinear, doc.ternary, doc.twist, doc.basis)
        try:
            twisted = twist_by_morphism(k, mapping)
        except NotMorphism as exc:
            return _fail_morphism(exc, doc.basis)
        _emit(serialize_algebra_doc(KIND_AKIVIS, twisted.basis_names,
                                    twisted.bracket, twisted.ternary,
                                    twisted.twist), args.out)
    return 0


def cmd_check_morphism(args: argparse.Namespace) -> int:
    f = parse_map_doc(_read(args.map))
    src = parse_algebra_doc(_read(args.src))
    dst = parse_algebra_doc(_read(args.dst))
    if src.kind != dst.kind:
        raise InputError(f"kind mismatch: {src.kind} vs {dst.kind}")
    if f.dim != src.dim or src.dim != dst.dim:
        raise InputError("map and algebras must share one dimension")
    if src.kind == KIND_ALGEBRA:
        rep = check_hom_algebra_morphism(
            f, HomAlgebra(src.bilinear, src.twist, src.basis),
            HomAlgebra(dst.bilinear, dst.twist, dst.basis))
    else:
        rep = check_akivis_morphism(
            f, HomAkivisAlgebra(src.bilinear, src.ternary, src.twist, src.basis),
            HomAkivisAlgebra(dst.bilinear, dst.ternary, dst.twist, dst.basis),
            strict=True)
    text = _read(args.map) + _read(args.src) + _read(args.dst)
    _emit(serialize_report([("morphism", rep)], src.basis, __version__,
                           _digest(text)), args.out)
    return 0 if rep.holds else 1


def cmd_nucleus(args: argparse.Namespace) -> int:
    doc = parse_algebra_doc(_read(args.file))
    basis = nucleus_basis(doc.bilinear)
    payload = {
        "dimension": doc.dim,
        "nucleus_dimension": len(basis),
        "basis": [[format_rational(x) for x in v.coords] for v in basis],
    }
    _emit(json.dumps(payload, indent=2, separators=(",", ": ")) + "\n", args.out)
    return 0


def cmd_demo(args: argparse.Namespace) -> int:
    entry = CATALOG.get(args.name)
    if entry is None:
        raise InputError(f"unknown demo '{args.name}'; available: "
                         + ", ".join(sorted(CATALOG)))
    params = dict(entry.params)
    for setting in args.param or []:
        key, sep, value = setting.partition("=")
        if not sep:
            raise InputError(f"--param expects k=v, got {setting!r}")
        if key not in params:
            raise InputError(f"demo '{args.name}' has no parameter {key!r}")
        params[key] = parse_rational(value, f"--param {key}")
    try:
        h = entry.build(**params)
    except ZeroParameter as exc:
        raise InputError(str(exc))
    _emit(serialize_algebra_doc(KIND_ALGEBRA, h.basis_names, h.mul,
                                twist=h.twist), args.out)
    return 0


def cmd_random(args: argparse.Namespace) -> int:
    try:
        cfg = GenConfig(dim=args.dim, seed=args.seed, coeff_bound=args.bound,
                        twist_order=args.order)
        h = random_multiplicative_hom_algebra(cfg)
    except (InfeasibleOrder, ValueError) as exc:
        raise InputError(str(exc))
    _emit(serialize_algebra_doc(KIND_ALGEBRA, h.basis_names, h.mul,
                                twist=h.twist), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homakivis",
        description="Exact workbench for Hom-algebras and Hom-Akivis algebras.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="evaluate every applicable identity")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("derive", help="commutator/Hom-associator algebra")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("twist", help="twist along a verified morphism")
    p.add_argument("file")
    p.add_argument("--map", required=True)
    p.add_argument("--mode", required=True, choices=("yau", "akivis"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("check-morphism", help="is the map a morphism src -> dst?")
    p.add_argument("map")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_morphism)

    p = sub.add_parser("nucleus", help="basis of the nucleus of the product")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_nucleus)

    p = sub.add_parser("demo", help="write a catalog algebra")
    p.add_argument("name")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--out")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("random", help="seeded multiplicative Hom-algebra")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotSkewSymmetric) as exc:
        return _fail_input(str(exc))


if __name__ == "__main__":
    sys.exit(main())
