"""Command line interface.

Inputs are file paths or ``corpus:<id>`` references.  Exit status: 0 on
success, 2 for usage errors, 3 for unparseable input, 4 for validation
failures (tables that are not singquandles, bad subsets, and the like).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import corpus
from .core import FiniteSingquandle, find_isomorphism, validate_tables
from .diagram import SingularPD, parse_pd, pd_to_presentation
from .errors import ParseError, ValidationError
from .fileformats import load_singquandle, render_singquandle
from .formulas import affine_singquandle
from .polynomial import PhiInvariant, SqPolynomial, sqp, ssqp
from .presentation import SingPresentation, enumerate_homs, hom_image, parse_presentation, phi_ssqp, render_presentation

USAGE_ERROR, PARSE_ERROR, VALIDATION_ERROR = 2, 3, 4


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_singquandle_arg(arg: str) -> FiniteSingquandle:
    if arg.startswith("corpus:"):
        obj = corpus.load(arg[len("corpus:"):])
        if not isinstance(obj, FiniteSingquandle):
            raise ParseError(f"corpus id {arg[len('corpus:'):]!r} is not a singquandle")
        return obj
    return load_singquandle(arg)


def _load_link_arg(arg: str) -> SingPresentation:
    """A link given as a presentation or as a PD code (compiled on the spot)."""
    if arg.startswith("corpus:"):
        obj = corpus.load(arg[len("corpus:"):])
        if isinstance(obj, SingularPD):
            return pd_to_presentation(obj)
        if isinstance(obj, SingPresentation):
            return obj
        raise ParseError(f"corpus id {arg[len('corpus:'):]!r} is not a link")
    text = _read(arg)
    stripped = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    if any(ln.startswith("generators:") for ln in stripped):
        return parse_presentation(text)
    return pd_to_presentation(parse_pd(text))


def _print_poly(p: SqPolynomial, fmt: str) -> None:
    if fmt == "machine":
        for mono, coeff in p.terms():
            print(" ".join(str(e) for e in mono), coeff)
    else:
        print(p.render())


def _print_phi(phi: PhiInvariant, fmt: str) -> None:
    if fmt == "machine":
        for poly, mult in phi.entries():
            flat = ";".join(" ".join([*map(str, mono), str(coeff)]) for mono, coeff in poly.terms())
            print(mult, flat)
    else:
        print(phi.render())


def _cmd_validate(args) -> int:
    if args.structure.startswith("corpus:"):
        q = _load_singquandle_arg(args.structure)  # corpus loads validate on the way in
        print(f"valid singquandle of order {q.order}")
        return 0
    q = load_singquandle(args.structure)  # raises NotA*Error with the report attached
    print(f"valid singquandle of order {q.order}")
    return 0


def _cmd_gen(args) -> int:
    if args.family != "affine":
        raise ParseError(f"unknown family {args.family!r}; only 'affine' is available")
    q = affine_singquandle(args.n, args.t, args.s)
    text = render_singquandle(q)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_sqp(args) -> int:
    _print_poly(sqp(_load_singquandle_arg(args.structure)), args.format)
    return 0


def _cmd_ssqp(args) -> int:
    q = _load_singquandle_arg(args.structure)
    subset = [q.index_of(lab.strip()) for lab in args.subset.split(",") if lab.strip()]
    _print_poly(ssqp(q, subset), args.format)
    return 0


def _cmd_color(args) -> int:
    pres = _load_link_arg(args.link)
    q = _load_singquandle_arg(args.structure)
    homs = enumerate_homs(pres, q)
    if args.format == "machine":
        print(len(homs))
    else:
        print(f"{len(homs)} colorings")
    if args.list:
        if args.format != "machine":
            print("generators: " + " ".join(pres.generators))
        for hom in homs:
            values = " ".join(q.labels[hom[g]] for g in pres.generators)
            image = ",".join(q.labels[x] for x in sorted(hom_image(q, hom)))
            print(f"{values} -> {{{image}}}")
    return 0


def _cmd_phi(args) -> int:
    pres = _load_link_arg(args.link)
    q = _load_singquandle_arg(args.structure)
    _print_phi(phi_ssqp(pres, q), args.format)
    return 0


def _cmd_iso(args) -> int:
    q1 = _load_singquandle_arg(args.first)
    q2 = _load_singquandle_arg(args.second)
    result = find_isomorphism(q1, q2)
    if result:
        print("isomorphic")
        for i, j in enumerate(result.mapping):
            print(f"  {q1.labels[i]} -> {q2.labels[j]}")
    else:
        print(f"not isomorphic ({result.reason})")
    return 0


def _cmd_pd2rel(args) -> int:
    if args.pd.startswith("corpus:"):
        obj = corpus.load(args.pd[len("corpus:"):])
        if not isinstance(obj, SingularPD):
            raise ParseError(f"corpus id {args.pd[len('corpus:'):]!r} is not a PD code")
        pd = obj
    else:
        pd = parse_pd(_read(args.pd))
    sys.stdout.write(render_presentation(pd_to_presentation(pd)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singquandles",
        description="Finite oriented singquandles: validation, polynomial invariants, "
                    "and colorings of singular links.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "machine"), default="human",
                       help="machine output is line-stable for scripting")

    p = sub.add_parser("validate", help="check a singquandle file against all axioms")
    p.add_argument("structure", help="singquandle file or corpus:<id>")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("gen", help="generate a structure from a named family")
    p.add_argument("family", help="family name; 'affine'")
    p.add_argument("--n", type=int, required=True, help="order (modulus)")
    p.add_argument("--t", type=int, required=True, help="star parameter, invertible mod n")
    p.add_argument("--s", type=int, required=True, help="R1 parameter")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sqp", help="singquandle polynomial of a structure")
    p.add_argument("structure")
    add_format(p)
    p.set_defaults(func=_cmd_sqp)

    p = sub.add_parser("ssqp", help="subsingquandle polynomial of a subset")
    p.add_argument("structure")
    p.add_argument("--subset", required=True, help="comma-separated element labels")
    add_format(p)
    p.set_defaults(func=_cmd_ssqp)

    p = sub.add_parser("color", help="count (and list) colorings of a link by a structure")
    p.add_argument("link", help="presentation/PD file or corpus:<id>")
    p.add_argument("structure")
    p.add_argument("--list", action="store_true", help="print every coloring with its image")
    add_format(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("phi", help="phi invariant of a link against a structure")
    p.add_argument("link")
    p.add_argument("structure")
    add_format(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("iso", help="search for an isomorphism between two structures")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("pd2rel", help="compile a PD code to a presentation")
    p.add_argument("pd", help="PD file or corpus:<id>")
    p.set_defaults(func=_cmd_pd2rel)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except ValidationError as exc:
        report = getattr(exc, "report", None)
        print(report.describe() if report is not None else f"error: {exc}", file=sys.stderr)
        return VALIDATION_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
