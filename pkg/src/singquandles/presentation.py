"""Singular link presentations and their colorings.

A presentation is a generator list plus relations, each relation a pair of
terms that every coloring must equate.  Colorings (homomorphisms into a
finite target) are enumerated by exhaustive backtracking over generator
assignments in list order; a relation is checked as soon as all of its
generators are bound.  Results come back in lexicographic order of the
assignment tuple, independent of backend.

File format::

    # comment
    name: 6_11l
    generators: x, y, z, w, k
    R2(x,y)/z = x
    z/w = y

The name line is optional; each remaining line is one ``lhs = rhs``
relation in the term grammar of :mod:`singquandles.terms`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .core import FiniteSingquandle
from .errors import ParseError, UnboundGeneratorError
from .polynomial import PhiInvariant, ssqp
from .terms import Gen, Term, eval_term, generators_of, parse_term, render_term


@dataclass(frozen=True)
class SingPresentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Term, Term], ...]
    name: Optional[str] = field(default=None)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ParseError(f"duplicate generator in {self.generators}")
        declared = set(self.generators)
        for lhs, rhs in self.relations:
            for t in (lhs, rhs):
                missing = [g for g in generators_of(t) if g not in declared]
                if missing:
                    raise UnboundGeneratorError(
                        f"relation {render_term(lhs)} = {render_term(rhs)} uses "
                        f"undeclared generator {missing[0]!r}")


def parse_presentation(text: str) -> SingPresentation:
    name = None
    generators: Optional[tuple[str, ...]] = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            name = line[len("name:"):].strip()
            continue
        if line.startswith("generators:"):
            if generators is not None:
                raise ParseError(f"line {lineno}: second generators line")
            names = [g.strip() for g in line[len("generators:"):].replace(",", " ").split()]
            if not names:
                raise ParseError(f"line {lineno}: empty generator list")
            generators = tuple(names)
            continue
        if generators is None:
            raise ParseError(f"line {lineno}: relations before the generators line")
        if line.count("=") != 1:
            raise ParseError(f"line {lineno}: a relation needs exactly one '='")
        lhs_text, rhs_text = line.split("=")
        try:
            lhs, rhs = parse_term(lhs_text), parse_term(rhs_text)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        for side in (lhs, rhs):
            for g in generators_of(side):
                if g not in generators:
                    raise ParseError(
                        f"line {lineno}: relation uses undeclared generator {g!r}")
        relations.append((lhs, rhs))
    if generators is None:
        raise ParseError("missing generators line")
    try:
        return SingPresentation(generators, tuple(relations), name=name)
    except UnboundGeneratorError as exc:
        raise ParseError(str(exc)) from None


def render_presentation(pres: SingPresentation) -> str:
    lines = []
    if pres.name:
        lines.append(f"name: {pres.name}")
    lines.append("generators: " + ", ".join(pres.generators))
    for lhs, rhs in pres.relations:
        lines.append(f"{render_term(lhs)} = {render_term(rhs)}")
    return "\n".join(lines) + "\n"


def _compile_term(term: Term, index: dict[str, int], code: list[tuple[int, int]]):
    if isinstance(term, Gen):
        code.append((kernels.OP_GEN, index[term.name]))
        return
    _compile_term(term.left, index, code)
    _compile_term(term.right, index, code)
    op = {"*": kernels.OP_STAR, "/": kernels.OP_BAR,
          "R1": kernels.OP_R1, "R2": kernels.OP_R2}[term.op]
    code.append((op, 0))


def _compile(pres: SingPresentation):
    """Flatten all relations into one instruction array plus span table."""
    index = {g: i for i, g in enumerate(pres.generators)}
    code: list[tuple[int, int]] = []
    spans = []
    ready = []
    for lhs, rhs in pres.relations:
        bounds = []
        for t in (lhs, rhs):
            start = len(code)
            _compile_term(t, index, code)
            bounds.extend((start, len(code)))
        spans.append(bounds)
        gens = set(generators_of(lhs)) | set(generators_of(rhs))
        ready.append(max(index[g] for g in gens))

    g = len(pres.generators)
    order = sorted(range(len(pres.relations)), key=lambda r: (ready[r], r))
    depth_ptr = np.zeros(g + 1, dtype=np.int64)
    for r in order:
        depth_ptr[ready[r] + 1] += 1
    depth_ptr = np.cumsum(depth_ptr)

    max_stack = 2
    for ls, le, rs, re_ in spans:
        for s, e in ((ls, le), (rs, re_)):
            depth = peak = 0
            for op, _ in code[s:e]:
                depth += 1 if op == kernels.OP_GEN else -1
                peak = max(peak, depth)
            max_stack = max(max_stack, peak)

    code_arr = np.array(code, dtype=np.int64).reshape(-1, 2)
    spans_arr = np.array(spans, dtype=np.int64).reshape(-1, 4)
    return code_arr, spans_arr, depth_ptr, np.array(order, dtype=np.int64), max_stack


def enumerate_homs(pres: SingPresentation, q: FiniteSingquandle) -> list[dict[str, int]]:
    """All colorings of the presentation by q, in lexicographic order of the
    generator value tuple.  Every returned coloring is re-checked against
    every relation with the plain tree evaluator, so backend pruning can
    never admit a spurious solution."""
    if not pres.generators:
        return [{}]
    code, spans, depth_ptr, order, max_stack = _compile(pres)
    rows = kernels.enumerate_colorings(
        q.order, len(pres.generators), q.star, q.bar, q.r1, q.r2,
        code, spans, depth_ptr, order, max_stack)
    homs = []
    for row in rows.tolist():
        hom = dict(zip(pres.generators, row))
        for lhs, rhs in pres.relations:
            if eval_term(lhs, q, hom) != eval_term(rhs, q, hom):
                raise RuntimeError(
                    f"backend returned a spurious coloring {hom} for {pres.name or 'presentation'}")
        homs.append(hom)
    return homs


def hom_image(q: FiniteSingquandle, hom: dict[str, int]) -> frozenset[int]:
    """Image of a coloring: the closure of its generator values.  Images of
    homomorphisms are always subsingquandles; that holds here because the
    closure is taken explicitly."""
    image = q.closure(hom.values())
    assert q.is_subsingquandle(image)
    return image


def phi_ssqp(pres: SingPresentation, q: FiniteSingquandle) -> PhiInvariant:
    """The multiset of ssqp values over all coloring images."""
    polys = [ssqp(q, hom_image(q, hom)) for hom in enumerate_homs(pres, q)]
    return PhiInvariant(polys)


def counting_invariant(pres: SingPresentation, q: FiniteSingquandle) -> int:
    return len(enumerate_homs(pres, q))
