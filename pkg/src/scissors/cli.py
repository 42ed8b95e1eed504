"""Command-line front end.

Exit status: 0 on success, 1 when an operation's precondition fails (or a
validation finds violations), 2 when an input file does not parse.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .constructions import mapping_torus
from .cutpaste import invariant_tuple, sk_equivalent, skk_equivalent
from .errors import ContractError, ParseError, ResourceError, StructuralError
from .homology import ChainComplex
from .invariants import k1_class
from .linalg import parse_matrices
from .simplicial import SimplicialObject, edgewise_subdivide, normalized_chains
from .squares import grid_nerve, k0_presentation, parse_squares, validate_squares
from .triangulation import (VertexAutomorphism, format_triangulation, parse_triangulation,
                            validate)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ContractError(f"cannot read {path}: {exc.strerror}") from None


def _first_keyword(text: str) -> str:
    for line in text.splitlines():
        words = line.split("#", 1)[0].split()
        if words:
            return words[0]
    return ""


def _load_triangulation(path: str):
    return parse_triangulation(_read(path))


def _automorphism(args, t, file_perm):
    if args.perm is None:
        if file_perm is None:
            raise ContractError("no automorphism given (use --perm or a 'perm' line)")
        return file_perm
    try:
        phi = VertexAutomorphism(tuple(int(w) for w in args.perm.replace(",", " ").split()))
    except ValueError:
        raise ParseError(f"bad --perm {args.perm!r}") from None
    except StructuralError as exc:
        raise ParseError(str(exc)) from None
    if file_perm is not None and file_perm != phi:
        print("warning: --perm overrides the perm line in the file", file=sys.stderr)
    return phi


def cmd_validate(args) -> int:
    text = _read(args.file)
    if _first_keyword(text) == "object":
        rep = validate_squares(parse_squares(text))
        print(rep.summary())
        return 0 if rep.valid else 1
    t, _ = parse_triangulation(text)
    rep = validate(t, allow_boundary=args.allow_boundary)
    print(rep.summary())
    return 0 if rep.valid else 1


def cmd_homology(args) -> int:
    text = _read(args.file)
    head = _first_keyword(text)
    if head == "kind":
        cx = normalized_chains(SimplicialObject.from_text(text))
    elif head == "matrix":
        cx = ChainComplex.from_dense(parse_matrices(text))
    else:
        t, _ = parse_triangulation(text)
        cx = t.chain_complex
    for n, g in enumerate(cx.homology()):
        print(f"H{n}: {g}")
    return 0


def _tuple_for(path, label):
    t, _ = _load_triangulation(path)
    return invariant_tuple(t, label)


def cmd_invariants(args) -> int:
    print(_tuple_for(args.file, args.bordism[0] if args.bordism else None).report())
    return 0


def cmd_equiv(args) -> int:
    labels = args.bordism or []
    if len(labels) > 2:
        raise ContractError("at most two --bordism labels")
    la = labels[0] if labels else None
    lb = labels[-1] if labels else None
    a, b = _tuple_for(args.a, la), _tuple_for(args.b, lb)
    verdict = skk_equivalent(a, b) if args.rel == "skk" else sk_equivalent(a, b)
    print(a.report())
    print(b.report())
    print(f"{{rel:{args.rel}, verdict:{str(verdict).lower()}}}")
    return 0


def cmd_k1(args) -> int:
    t, phi = _load_triangulation(args.file)
    print(k1_class(t, _automorphism(args, t, phi)))
    return 0


def cmd_torus(args) -> int:
    t, phi = _load_triangulation(args.file)
    if args.perm is None and phi is None:
        phi = VertexAutomorphism.identity(t.n_vertices)
    else:
        phi = _automorphism(args, t, phi)
    sys.stdout.write(format_triangulation(mapping_torus(t, phi, layers=args.layers)))
    return 0


def cmd_subdivide(args) -> int:
    x = SimplicialObject.from_text(_read(args.file))
    sys.stdout.write(edgewise_subdivide(x).to_text())
    return 0


def cmd_k0(args) -> int:
    k = k0_presentation(parse_squares(_read(args.file)))
    print(f"K0: {k.group}")
    for g in k.generators:
        print(f"generator {g}")
    for name, cl in zip(k.class_names, k.category.isoclasses):
        print(f"{name} = {' '.join(map(str, k.class_of(cl[0])))}".rstrip())
    return 0


def cmd_grid(args) -> int:
    c = parse_squares(_read(args.file))
    x = grid_nerve(c, args.n, budget=args.budget)
    for n, count in enumerate(x.counts()):
        print(f"degree {n}: {count} nondegenerate")
    hom = normalized_chains(x).homology()
    for n, g in enumerate(hom[:-1] if len(hom) > 1 else hom):
        print(f"H{n}: {g}")
    return 0


def cmd_fixture(args) -> int:
    sys.stdout.write(format_triangulation(fixtures.fixture(args.name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scissors", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", help="check a triangulation or squares category")
    s.add_argument("file")
    s.add_argument("--allow-boundary", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("homology", help="integral homology of a triangulation, simplicial object or matrices")
    s.add_argument("file")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("invariants", help="chi, kappa and bordism class")
    s.add_argument("file")
    s.add_argument("--bordism", action="append")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("equiv", help="decide SK or SKK equivalence of two triangulations")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--rel", choices=("sk", "skk"), default="skk")
    s.add_argument("--bordism", action="append", help="label for both inputs, or give it twice")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("k1", help="determinant class of a vertex automorphism")
    s.add_argument("file")
    s.add_argument("--perm")
    s.set_defaults(func=cmd_k1)

    s = sub.add_parser("torus", help="mapping torus of an automorphism (identity by default)")
    s.add_argument("file")
    s.add_argument("--perm")
    s.add_argument("--layers", type=int, default=3)
    s.set_defaults(func=cmd_torus)

    s = sub.add_parser("subdivide", help="edgewise subdivision of a simplicial object")
    s.add_argument("file")
    s.set_defaults(func=cmd_subdivide)

    s = sub.add_parser("k0", help="K_0 presentation of a squares category")
    s.add_argument("file")
    s.set_defaults(func=cmd_k0)

    s = sub.add_parser("grid", help="grid nerve of a squares category")
    s.add_argument("file")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--budget", type=int, default=100000)
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("fixture", help="write a built-in triangulation")
    s.add_argument("name")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ContractError, StructuralError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
