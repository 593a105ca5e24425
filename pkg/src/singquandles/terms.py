"""Terms in the generators of a singular link presentation.

Grammar (ASCII): identifiers are generators, infix ``*`` is the quandle
operation, infix ``/`` is its right inverse, both left associative with
equal precedence, so ``a*b/c`` means ``(a*b)/c``.  ``R1(s,t)`` and
``R2(s,t)`` are the two singular-crossing operations.  Parentheses group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import TermSyntaxError, UnboundGeneratorError, UnknownOperatorError

OPS = ("*", "/", "R1", "R2")
_RESERVED = ("R1", "R2")


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Apply:
    op: str  # one of OPS
    left: "Term"
    right: "Term"


Term = Union[Gen, Apply]

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z_]\w*)|(?P<sym>[*/(),]))")


def _tokens(text: str) -> Iterator[tuple[str, str, int]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            # nothing but trailing whitespace is fine
            if text[pos:].strip():
                raise TermSyntaxError(f"unexpected character {text[pos:].strip()[0]!r}",
                                      pos, ("identifier", "operator"))
            return
        if m.group("ident"):
            yield "ident", m.group("ident"), m.start("ident")
        else:
            yield "sym", m.group("sym"), m.start("sym")
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym: str):
        kind, val, pos = self.take()
        if kind != "sym" or val != sym:
            raise TermSyntaxError(f"found {val!r}" if kind != "eof" else "unexpected end of input",
                                  pos, (repr(sym),))

    def expr(self) -> Term:
        node = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in ("*", "/"):
                self.take()
                node = Apply(val, node, self.atom())
            else:
                return node

    def atom(self) -> Term:
        kind, val, pos = self.take()
        if kind == "sym" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            nkind, nval, _ = self.peek()
            if nkind == "sym" and nval == "(":
                if val not in _RESERVED:
                    raise UnknownOperatorError(
                        f"unknown operator {val!r} at position {pos}; only R1 and R2 take arguments")
                self.take()
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return Apply(val, left, right)
            if val in _RESERVED:
                raise TermSyntaxError(f"{val} is an operator, not a generator", pos, ("'('",))
            return Gen(val)
        raise TermSyntaxError(f"found {val!r}" if kind != "eof" else "unexpected end of input",
                              pos, ("identifier", "'('"))


def parse_term(text: str) -> Term:
    """Parse a term; raises TermSyntaxError or UnknownOperatorError."""
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek()
    if kind != "eof":
        raise TermSyntaxError(f"trailing input {val!r}", pos, ("end of term",))
    return node


def render_term(term: Term) -> str:
    """Render with minimal parentheses; parse(render(t)) == t."""
    if isinstance(term, Gen):
        return term.name
    if term.op in ("R1", "R2"):
        return f"{term.op}({render_term(term.left)},{render_term(term.right)})"
    left = render_term(term.left)
    right = render_term(term.right)
    # equal precedence, left associative: only a composite right child needs parens
    if isinstance(term.right, Apply) and term.right.op in ("*", "/"):
        right = f"({right})"
    return f"{left}{term.op}{right}"


def eval_term(term: Term, q, assignment) -> int:
    """Evaluate under a generator assignment (name -> element of q)."""
    if isinstance(term, Gen):
        try:
            return assignment[term.name]
        except KeyError:
            raise UnboundGeneratorError(f"generator {term.name!r} is not assigned") from None
    a = eval_term(term.left, q, assignment)
    b = eval_term(term.right, q, assignment)
    if term.op == "*":
        return int(q.star[a, b])
    if term.op == "/":
        return int(q.bar[a, b])
    if term.op == "R1":
        return int(q.r1[a, b])
    return int(q.r2[a, b])


def generators_of(term: Term) -> tuple[str, ...]:
    """Generator names in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(t: Term):
        if isinstance(t, Gen):
            seen.setdefault(t.name)
        else:
            walk(t.left)
            walk(t.right)

    walk(term)
    return tuple(seen)
