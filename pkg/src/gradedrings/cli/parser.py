"""Session language: declarations of rings, monoids, gradings and elements.

    ring R = Zmod(6);
    monoid M = FreeAbelianGroup(1);
    let g = 2*e[1] + 3*e[-1];
    let h in R[M] = g^2 - 1;

Statements end with ``;``.  ``#`` starts a comment.  Expressions use
``+ - * ^``, parentheses, integer and ``p/q`` literals, basis elements
``e[...]``, earlier bindings, and the variables of a ``PolyQuotient`` ring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..coeffring import QQ, ZZ, CoefficientRing, IntegersMod, factorize
from ..errors import GradedRingError, MonoidMismatch, RingMismatch
from ..grobner import Polynomial, PolynomialQuotient, PolynomialRing, buchberger
from ..monoid import (
    AbelianGroup,
    FreeMonoid,
    Monoid,
    MonoidMorphism,
    Submonoid,
    TableMonoid,
    grothendieck_group,
)
from ..monoidring import MonoidRing, RingElement

MAX_EXPONENT = 512
MAX_RANK = 16
MAX_LITERAL = 10**18


class SessionError(Exception):
    """A located diagnostic; ``kind`` is SyntaxError, UnknownName or RingMismatch."""

    def __init__(self, kind: str, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {kind}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s+|#[^\n]*|(?P<INT>\d+)|(?P<NAME>[A-Za-z_][A-Za-z0-9_]*)|(?P<OP>\.\.|[;=()\[\],+\-*/^])")


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SessionError("SyntaxError", f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        if m.lastgroup:
            out.append(Token(m.lastgroup, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    out.append(Token("EOF", "", line, pos - line_start + 1))
    return out


@dataclass
class SessionDeclaration:
    """Resolved declarations, in order; names are unique across kinds."""

    rings: dict = field(default_factory=dict)
    monoids: dict = field(default_factory=dict)
    gradings: dict = field(default_factory=dict)
    bindings: dict = field(default_factory=dict)
    order: list = field(default_factory=list)  # (kind, name)

    def names(self):
        return {name for _, name in self.order}

    def default_parent(self) -> MonoidRing | None:
        ring = next((self.rings[n] for k, n in reversed(self.order) if k == "ring"), None)
        monoid = next((self.monoids[n] for k, n in reversed(self.order) if k == "monoid"), None)
        if ring is None or monoid is None:
            return None
        return MonoidRing(ring, monoid)

    def ring_name(self, ring: CoefficientRing) -> str | None:
        return next((n for n, r in self.rings.items() if r == ring), None)

    def monoid_name(self, monoid: Monoid) -> str | None:
        return next((n for n, m in self.monoids.items() if m == monoid), None)


class _Parser:
    def __init__(self, text: str, session: SessionDeclaration | None = None):
        self.toks = tokenize(text)
        self.i = 0
        self.s = session if session is not None else SessionDeclaration()

    # token helpers ---------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message, tok=None, kind="SyntaxError"):
        tok = tok or self.tok
        return SessionError(kind, message, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.kind in ("OP", "NAME") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text) -> Token:
        if self.tok.kind in ("OP", "NAME") and self.tok.text == text:
            return self.advance()
        found = self.tok.text or "end of input"
        raise self.error(f"expected {text!r}, found {found!r}")

    def name(self) -> Token:
        if self.tok.kind != "NAME":
            raise self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def integer(self, allow_sign=True) -> int:
        neg = allow_sign and self.accept("-")
        if self.tok.kind != "INT":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        t = self.advance()
        v = int(t.text)
        if v > MAX_LITERAL:
            raise self.error("integer literal too large", t)
        return -v if neg else v

    def intlist(self, close: str) -> list[int]:
        vals = []
        if self.tok.text == close:
            return vals
        vals.append(self.integer())
        while self.accept(","):
            vals.append(self.integer())
        return vals

    # statements ------------------------------------------------------------
    def parse(self) -> SessionDeclaration:
        while self.tok.kind != "EOF":
            self.statement()
        return self.s

    def statement(self):
        t = self.tok
        if self.accept("ring"):
            self.declare("ring", self.rings_spec)
        elif self.accept("monoid"):
            self.declare("monoid", self.monoid_spec)
        elif self.accept("grading"):
            self.declare("grading", self.grading_spec)
        elif self.accept("let"):
            self.let()
        else:
            raise self.error(f"expected ring, monoid, grading or let, found {t.text!r}")

    def _new_name(self) -> Token:
        t = self.name()
        if t.text in self.s.names() or t.text in _RESERVED:
            raise self.error(f"name {t.text!r} is already declared or reserved", t)
        return t

    def declare(self, kind, spec):
        t = self._new_name()
        self.expect("=")
        start = self.tok
        try:
            value = spec()
        except SessionError:
            raise
        except (GradedRingError, ValueError, ArithmeticError, TypeError) as exc:
            raise self.error(str(exc), start) from None
        self.expect(";")
        getattr(self.s, {"ring": "rings", "monoid": "monoids", "grading": "gradings"}[kind])[t.text] = value
        self.s.order.append((kind, t.text))

    def rings_spec(self) -> CoefficientRing:
        t = self.name()
        if t.text == "ZZ":
            return ZZ
        if t.text == "QQ":
            return QQ
        if t.text in ("Zmod", "GF"):
            self.expect("(")
            n = self.integer(allow_sign=False)
            self.expect(")")
            if n < 2 or n > 2**31:
                raise self.error("modulus must lie in [2, 2^31]", t)
            if t.text == "GF" and not (len(factorize(n)) == 1 and factorize(n)[0][1] == 1):
                raise self.error(f"GF({n}) needs a prime", t)
            return IntegersMod(n)
        if t.text == "PolyQuotient":
            return self.poly_quotient()
        if t.text in self.s.rings:
            return self.s.rings[t.text]
        raise self.error(f"unknown ring {t.text!r}", t, "UnknownName")

    def poly_quotient(self) -> PolynomialQuotient:
        self.expect("(")
        ft = self.tok
        field_ring = self.rings_spec()
        if not field_ring.is_field:
            raise self.error(f"{field_ring} is not a field", ft)
        self.expect(",")
        self.expect("[")
        names = [self.name().text]
        while self.accept(","):
            names.append(self.name().text)
        self.expect("]")
        if len(set(names)) != len(names) or "e" in names:
            raise self.error("variable names must be distinct and differ from 'e'")
        self.expect(",")
        order = "lex"
        ring = PolynomialRing(field_ring, tuple(names), order)
        self.expect("[")
        gens = []
        if self.tok.text != "]":
            gens.append(self.poly_expr(ring))
            while self.accept(","):
                gens.append(self.poly_expr(ring))
        self.expect("]")
        if self.accept(","):
            ot = self.name()
            if ot.text not in ("lex", "grevlex"):
                raise self.error("term order must be lex or grevlex", ot)
            order = ot.text
        self.expect(")")
        ring = ring.with_order(order)
        gb = buchberger([ring(g) for g in gens], ring=ring)
        return PolynomialQuotient(gb)

    def rank(self) -> int:
        t = self.tok
        r = self.integer(allow_sign=False)
        if r > MAX_RANK:
            raise self.error(f"rank {r} exceeds the bound {MAX_RANK}", t)
        return r

    def monoid_spec(self) -> Monoid:
        t = self.name()
        if t.text == "FreeMonoid":
            self.expect("(")
            k = self.rank()
            self.expect(")")
            return FreeMonoid(k)
        if t.text == "FreeAbelianGroup":
            self.expect("(")
            r = self.rank()
            self.expect(")")
            return AbelianGroup(r)
        if t.text == "AbelianGroup":
            self.expect("(")
            r = self.rank()
            inv = []
            if self.accept(";"):
                inv = self.intlist(")")
            if len(inv) > MAX_RANK:
                raise self.error(f"more than {MAX_RANK} invariant factors", t)
            self.expect(")")
            return AbelianGroup(r, tuple(inv))
        if t.text == "Submonoid":
            self.expect("(")
            amb = self.monoid_spec()
            if not isinstance(amb, AbelianGroup):
                raise self.error("the ambient of a submonoid must be a group", t)
            self.expect(";")
            gens = [self.vector()]
            while self.accept(","):
                gens.append(self.vector())
            self.expect(")")
            return Submonoid(amb, tuple(gens))
        if t.text == "TableMonoid":
            self.expect("(")
            size = self.integer(allow_sign=False)
            self.expect(";")
            self.expect("[")
            rows = [self.bracketed_ints()]
            while self.accept(","):
                rows.append(self.bracketed_ints())
            self.expect("]")
            self.expect(";")
            ident = self.integer(allow_sign=False)
            self.expect(")")
            if len(rows) != size:
                raise self.error(f"table has {len(rows)} rows, expected {size}", t)
            return TableMonoid(tuple(tuple(r) for r in rows), ident)
        if t.text in self.s.monoids:
            return self.s.monoids[t.text]
        raise self.error(f"unknown monoid {t.text!r}", t, "UnknownName")

    def vector(self) -> tuple:
        self.expect("(")
        vals = self.intlist(")")
        self.expect(")")
        return tuple(vals)

    def bracketed_ints(self) -> list[int]:
        self.expect("[")
        vals = self.intlist("]")
        self.expect("]")
        return vals

    def lookup_monoid(self) -> Monoid:
        t = self.name()
        if t.text not in self.s.monoids:
            raise self.error(f"unknown monoid {t.text!r}", t, "UnknownName")
        return self.s.monoids[t.text]

    def grading_spec(self) -> MonoidMorphism:
        t = self.name()
        if t.text == "Hom":
            self.expect("(")
            src = self.lookup_monoid()
            self.expect(",")
            tgt = self.lookup_monoid()
            self.expect(";")
            self.expect("[")
            rows = []
            if self.tok.text != "]":
                rows.append(self.bracketed_ints())
                while self.accept(","):
                    rows.append(self.bracketed_ints())
            self.expect("]")
            self.expect(")")
            return MonoidMorphism(src, tgt, matrix=rows)
        if t.text == "Canonical":
            self.expect("(")
            src = self.lookup_monoid()
            self.expect(")")
            return grothendieck_group(src)[1]
        raise self.error(f"unknown grading constructor {t.text!r} (use Hom or Canonical)", t)

    def let(self):
        t = self._new_name()
        parent = None
        if self.accept("in"):
            rt = self.name()
            if rt.text not in self.s.rings:
                raise self.error(f"unknown ring {rt.text!r}", rt, "UnknownName")
            self.expect("[")
            mt = self.name()
            if mt.text not in self.s.monoids:
                raise self.error(f"unknown monoid {mt.text!r}", mt, "UnknownName")
            self.expect("]")
            parent = MonoidRing(self.s.rings[rt.text], self.s.monoids[mt.text])
        else:
            parent = self.s.default_parent()
            if parent is None:
                raise self.error("declare a ring and a monoid before the first let", t, "UnknownName")
        self.expect("=")
        value = self.expr(parent)
        self.expect(";")
        self.s.bindings[t.text] = value
        self.s.order.append(("let", t.text))

    # element expressions ---------------------------------------------------
    def guard(self, tok, fn, *args):
        try:
            return fn(*args)
        except SessionError:
            raise
        except RingMismatch as exc:
            raise self.error(str(exc), tok, "RingMismatch") from None
        except MonoidMismatch as exc:
            raise self.error(str(exc), tok, "RingMismatch") from None
        except (GradedRingError, ValueError, ArithmeticError, TypeError) as exc:
            raise self.error(str(exc), tok) from None

    def expr(self, P: MonoidRing) -> RingElement:
        neg = False
        if self.accept("-"):
            neg = True
        elif self.accept("+"):
            pass
        out = self.term(P)
        if neg:
            out = -out
        while self.tok.text in ("+", "-") and self.tok.kind == "OP":
            op = self.advance()
            rhs = self.term(P)
            out = self.guard(op, lambda a, b: a + b if op.text == "+" else a - b, out, rhs)
        return out

    def term(self, P):
        out = self.power(P)
        while self.tok.kind == "OP" and self.tok.text == "*":
            op = self.advance()
            rhs = self.power(P)
            out = self.guard(op, lambda a, b: a * b, out, rhs)
        return out

    def power(self, P):
        base = self.atom(P)
        if self.tok.kind == "OP" and self.tok.text == "^":
            op = self.advance()
            k = self.integer()
            if abs(k) > MAX_EXPONENT:
                raise self.error("exponent too large", op)
            base = self.guard(op, lambda b: b**k, base)
        return base

    def atom(self, P):
        t = self.tok
        if self.accept("-"):
            return -self.power(P)
        if t.kind == "INT":
            num = self.integer(allow_sign=False)
            if self.tok.kind == "OP" and self.tok.text == "/":
                self.advance()
                den = self.integer(allow_sign=False)
                if den == 0:
                    raise self.error("division by zero", t)
                return self.guard(t, P, Fraction(num, den))
            return self.guard(t, P, num)
        if self.accept("("):
            inner = self.expr(P)
            self.expect(")")
            return inner
        if t.kind == "NAME":
            self.advance()
            if t.text == "e":
                self.expect("[")
                coords = self.intlist("]")
                self.expect("]")
                return self.guard(t, P.epsilon, tuple(coords))
            if t.text in self.s.bindings:
                val = self.s.bindings[t.text]
                if val.parent != P:
                    raise self.error(f"{t.text} lives in {val.parent}, not {P}", t, "RingMismatch")
                return val
            R = P.coeffs
            if isinstance(R, PolynomialQuotient) and t.text in R.poly_ring.names:
                idx = R.poly_ring.names.index(t.text)
                return P(R.canon(R.poly_ring.gens()[idx]))
            raise self.error(f"unknown name {t.text!r}", t, "UnknownName")
        raise self.error(f"unexpected {t.text or 'end of input'!r} in expression")

    def poly_expr(self, ring: PolynomialRing) -> Polynomial:
        """Polynomial expression in the variables of ``ring`` (no e[...])."""
        neg = self.accept("-")
        if not neg:
            self.accept("+")
        out = self.poly_term(ring)
        if neg:
            out = -out
        while self.tok.kind == "OP" and self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.poly_term(ring)
            out = out + rhs if op == "+" else out - rhs
        return out

    def poly_term(self, ring):
        out = self.poly_power(ring)
        while self.tok.kind == "OP" and self.tok.text == "*":
            self.advance()
            out = out * self.poly_power(ring)
        return out

    def poly_power(self, ring):
        base = self.poly_atom(ring)
        if self.tok.kind == "OP" and self.tok.text == "^":
            op = self.advance()
            k = self.integer(allow_sign=False)
            if k > 64:
                raise self.error("exponent too large in an ideal generator", op)
            base = base**k
        return base

    def poly_atom(self, ring):
        t = self.tok
        if self.accept("-"):
            return -self.poly_power(ring)
        if t.kind == "INT":
            num = self.integer(allow_sign=False)
            if self.tok.kind == "OP" and self.tok.text == "/":
                self.advance()
                den = self.integer(allow_sign=False)
                if den == 0:
                    raise self.error("division by zero", t)
                return self.guard(t, ring, Fraction(num, den))
            return self.guard(t, ring, num)
        if self.accept("("):
            inner = self.poly_expr(ring)
            self.expect(")")
            return inner
        if t.kind == "NAME" and t.text in ring.names:
            self.advance()
            return ring.gens()[ring.names.index(t.text)]
        if t.kind == "NAME":
            raise self.error(f"unknown variable {t.text!r}", t, "UnknownName")
        raise self.error(f"unexpected {t.text or 'end of input'!r} in polynomial")


_RESERVED = {"ring", "monoid", "grading", "let", "in", "e", "ZZ", "QQ", "Zmod", "GF", "PolyQuotient",
             "FreeMonoid", "FreeAbelianGroup", "AbelianGroup", "Submonoid", "TableMonoid", "Hom", "Canonical"}


def parse_session(text: str, session: SessionDeclaration | None = None) -> SessionDeclaration:
    """Parse declarations (optionally extending an existing session)."""
    try:
        return _Parser(text, session).parse()
    except RecursionError:
        raise SessionError("SyntaxError", "expression nested too deeply", 1, 1) from None


def parse_expression(text: str, session: SessionDeclaration, parent: MonoidRing | None = None) -> RingElement:
    """Evaluate an expression against a session.

    The ambient ring is ``parent`` if given, else that of the first binding
    mentioned, else the last declared ring and monoid.
    """
    p = _Parser(text, session)
    if parent is None:
        for tok in p.toks:
            if tok.kind == "NAME" and tok.text in session.bindings:
                parent = session.bindings[tok.text].parent
                break
        else:
            parent = session.default_parent()
    if parent is None:
        raise SessionError("UnknownName", "no ring and monoid declared", 1, 1)
    try:
        value = p.expr(parent)
    except RecursionError:
        raise SessionError("SyntaxError", "expression nested too deeply", 1, 1) from None
    if p.tok.kind != "EOF":
        raise p.error(f"unexpected {p.tok.text!r} after expression")
    return value


# --- printing -----------------------------------------------------------------


def format_ring(R: CoefficientRing) -> str:
    if R == ZZ:
        return "ZZ"
    if R == QQ:
        return "QQ"
    if isinstance(R, IntegersMod):
        return f"Zmod({R.n})"
    if isinstance(R, PolynomialQuotient):
        pr = R.poly_ring
        gens = ", ".join(str(g) for g in R.gb.generators)
        return f"PolyQuotient({format_ring(pr.field)}, [{', '.join(pr.names)}], [{gens}], {pr.order})"
    raise ValueError(f"cannot print {R}")


def format_monoid(M: Monoid) -> str:
    if isinstance(M, FreeMonoid):
        return f"FreeMonoid({M.k})"
    if isinstance(M, AbelianGroup):
        if not M.invariants:
            return f"FreeAbelianGroup({M.free_rank})"
        return f"AbelianGroup({M.free_rank}; {', '.join(map(str, M.invariants))})"
    if isinstance(M, Submonoid):
        gens = ", ".join("(" + ", ".join(map(str, g)) + ")" for g in M.gens)
        return f"Submonoid({format_monoid(M.ambient)}; {gens})"
    if isinstance(M, TableMonoid):
        rows = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in M.table)
        return f"TableMonoid({len(M.table)}; [{rows}]; {M.identity_index})"
    raise ValueError(f"cannot print {M}")


def format_session(s: SessionDeclaration) -> str:
    lines = []
    for kind, name in s.order:
        if kind == "ring":
            lines.append(f"ring {name} = {format_ring(s.rings[name])};")
        elif kind == "monoid":
            lines.append(f"monoid {name} = {format_monoid(s.monoids[name])};")
        elif kind == "grading":
            phi = s.gradings[name]
            src, tgt = s.monoid_name(phi.source), s.monoid_name(phi.target)
            if phi.matrix is not None and src and tgt:
                rows = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in phi.matrix)
                lines.append(f"grading {name} = Hom({src}, {tgt}; [{rows}]);")
            elif src:
                lines.append(f"grading {name} = Canonical({src});")
            else:
                raise ValueError(f"grading {name} cannot be printed")
        else:
            f = s.bindings[name]
            r, m = s.ring_name(f.ring), s.monoid_name(f.monoid)
            lines.append(f"let {name} in {r}[{m}] = {f};")
    return "\n".join(lines) + ("\n" if lines else "")
