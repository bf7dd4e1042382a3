"""Surface syntax for ring elements and pullback identities.

Grammar (whitespace is insignificant)::

    identity := expr "~" expr
    expr     := ["+"|"-"] term { ("+"|"-") term }
    term     := [int ["*"]] ( "D" | "[" rsum "]" "*" "D" )
    rsum     := ["+"|"-"] rterm { ("+"|"-") rterm }
    rterm    := rfactor { "*" rfactor }
    rfactor  := rbase [ "^" uint ]
    rbase    := int | generator | "(" rsum ")"

Generators: ``i`` (gaussian), ``a`` and ``j = a - 1`` (sixthroot), ``z``
(fifthroot). Identity files hold one identity per line, ``#`` comments,
and ``ring: <kind>`` lines selecting the ring for the lines that follow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .rings import RingElement, RingKind, RingSpec, format_element, ring_make

MAX_EXPONENT = 4096
MAX_BITS = 1 << 14
MAX_DEPTH = 200
MAX_DIGITS = 1000

GENERATORS = {
    RingKind.GAUSSIAN: {"i": lambda R: R.gen},
    RingKind.SIXTH_ROOT: {"a": lambda R: R.gen, "j": lambda R: R.gen - 1},
    RingKind.FIFTH_ROOT: {"z": lambda R: R.gen},
}
ALL_GENERATORS = {"i", "a", "j", "z", "x"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "eof"
    text: str
    start: int  # 0-based offset
    end: int


def tokenize(text: str) -> list[Token]:
    out = []
    k = 0
    n = len(text)
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isascii() and ch.isdigit():
            s = k
            while k < n and text[k].isascii() and text[k].isdigit():
                k += 1
            if k - s > MAX_DIGITS:
                raise _error(text, s, f"integer literal longer than {MAX_DIGITS} digits")
            out.append(Token("int", text[s:k], s, k))
        elif ch.isascii() and ch.isalpha():
            out.append(Token("name", ch, k, k + 1))
            k += 1
        elif ch in "+-*^()[]~":
            out.append(Token("op", ch, k, k + 1))
            k += 1
        else:
            raise _error(text, k, f"unexpected character {ch!r}")
    out.append(Token("eof", "", n, n))
    return out


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _error(text: str, offset: int, message: str) -> ParseError:
    return ParseError(message, *_position(text, offset))


class _Parser:
    def __init__(self, text: str, ring: RingSpec | None, generators: dict):
        self.text = text
        self.ring = ring
        self.generators = generators
        self.toks = tokenize(text)
        self.k = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise _error(self.text, tok.start, f"{message}, found {what}")

    def accept(self, text: str) -> Token | None:
        if self.tok.kind == "op" and self.tok.text == text:
            t = self.tok
            self.k += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            self.fail(f"expected {text!r}")
        return t

    # ring expressions; values are produced by the algebra callbacks
    def rsum(self, alg):
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        acc = self.rterm(alg)
        if sign < 0:
            acc = alg.neg(acc)
        while True:
            if self.accept("+"):
                acc = alg.add(acc, self.rterm(alg))
            elif self.accept("-"):
                acc = alg.sub(acc, self.rterm(alg))
            else:
                return acc

    def rterm(self, alg):
        acc = self.rfactor(alg)
        while self.accept("*"):
            acc = alg.mul(acc, self.rfactor(alg))
            self._size_check(alg, acc)
        return acc

    def rfactor(self, alg):
        start = self.tok
        base = self.rbase(alg)
        if self.accept("^"):
            t = self.tok
            if t.kind != "int":
                self.fail("expected a nonnegative integer exponent")
            self.k += 1
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise _error(self.text, t.start, f"exponent {e} exceeds {MAX_EXPONENT}")
            if alg.pow_bits(base, e) > MAX_BITS:
                self.fail("value too large", start)
            base = alg.pow(base, e)
        return base

    def rbase(self, alg):
        t = self.tok
        if t.kind == "int":
            self.k += 1
            return alg.const(int(t.text))
        if t.kind == "name":
            if t.text not in self.generators:
                if t.text in ALL_GENERATORS:
                    self.fail("generator not available in this ring", t)
                self.fail("unknown token", t)
            self.k += 1
            return alg.gen(t.text)
        if self.accept("("):
            self.depth += 1
            if self.depth > MAX_DEPTH:
                self.fail("nesting too deep", t)
            v = self.rsum(alg)
            self.expect(")")
            self.depth -= 1
            return v
        self.fail("expected an integer, a generator or '('")

    def _size_check(self, alg, value, tok: Token | None = None):
        if alg.bits(value) > MAX_BITS:
            self.fail("value too large", tok)

    # identities
    def side(self, alg):
        terms = []
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        terms.append(self.term(alg, sign))
        while True:
            if self.accept("+"):
                terms.append(self.term(alg, 1))
            elif self.accept("-"):
                terms.append(self.term(alg, -1))
            else:
                return terms

    def term(self, alg, sign):
        start = self.tok.start
        coeff = 1
        if self.tok.kind == "int":
            coeff = int(self.tok.text)
            self.k += 1
            self.accept("*")
        if self.tok.kind == "name" and self.tok.text == "D":
            end = self.tok.end
            self.k += 1
            return Term(sign * coeff, self.ring.one, (start, end))
        self.expect("[")
        elem = self.rsum(alg)
        self.expect("]")
        self.expect("*")
        if not (self.tok.kind == "name" and self.tok.text == "D"):
            self.fail("expected 'D'")
        end = self.tok.end
        self.k += 1
        return Term(sign * coeff, elem, (start, end))

    def end(self):
        if self.tok.kind != "eof":
            self.fail("unexpected trailing input")


class _RingAlgebra:
    def __init__(self, ring: RingSpec):
        self.ring = ring

    def const(self, n):
        return self.ring.integer(n)

    def gen(self, name):
        return GENERATORS[self.ring.kind][name](self.ring)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a**e

    def bits(self, a):
        return max(abs(c).bit_length() for c in a.coeffs)

    def pow_bits(self, a, e):
        return e * (self.bits(a) + self.ring.degree.bit_length())


class _PolyAlgebra:
    """Integer polynomials in ``x``, lowest degree first."""

    def const(self, n):
        return (n,)

    def gen(self, name):
        return (0, 1)

    def add(self, a, b):
        n = max(len(a), len(b))
        return tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))

    def neg(self, a):
        return tuple(-c for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return tuple(out)

    def pow(self, a, e):
        out = (1,)
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def bits(self, a):
        return max(abs(c).bit_length() for c in a)

    def pow_bits(self, a, e):
        if (len(a) - 1) * e > 256:
            return MAX_BITS + 1
        return e * (self.bits(a) + len(a).bit_length())


def _ring(ring: RingSpec | RingKind | str) -> RingSpec:
    return ring if isinstance(ring, RingSpec) else ring_make(ring)


def parse_ring_element(text: str, ring: RingSpec | RingKind | str) -> RingElement:
    ring = _ring(ring)
    parser = _Parser(text, ring, GENERATORS[ring.kind])
    value = parser.rsum(_RingAlgebra(ring))
    parser.end()
    return value


def parse_polynomial(text: str) -> tuple[int, ...]:
    """Integer polynomial in ``x``, coefficients lowest degree first."""
    parser = _Parser(text, None, {"x": None})
    value = list(parser.rsum(_PolyAlgebra()))
    parser.end()
    while len(value) > 1 and value[-1] == 0:
        value.pop()
    return tuple(value)


@dataclass(frozen=True)
class Term:
    coeff: int
    element: RingElement
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ParsedIdentity:
    ring: RingSpec
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]
    source: str = field(default="", compare=False)

    def sides(self):
        return (
            [(t.coeff, t.element) for t in self.lhs],
            [(t.coeff, t.element) for t in self.rhs],
        )

    def __str__(self):
        return format_identity(self)


def parse_identity(text: str, ring: RingSpec | RingKind | str) -> ParsedIdentity:
    ring = _ring(ring)
    parser = _Parser(text, ring, GENERATORS[ring.kind])
    alg = _RingAlgebra(ring)
    lhs = parser.side(alg)
    parser.expect("~")
    rhs = parser.side(alg)
    parser.end()
    return ParsedIdentity(ring, tuple(lhs), tuple(rhs), text)


def _format_side(terms) -> str:
    out = []
    for k, t in enumerate(terms):
        c = t.coeff
        body = "D" if t.element == t.element.spec.one else f"[{format_element(t.element)}]*D"
        mag = abs(c)
        piece = body if mag == 1 else f"{mag} {body}"
        if k == 0:
            out.append(piece if c >= 0 else f"-{piece}")
        else:
            out.append(f" + {piece}" if c >= 0 else f" - {piece}")
    return "".join(out)


def format_identity(ident: ParsedIdentity) -> str:
    return f"{_format_side(ident.lhs)} ~ {_format_side(ident.rhs)}"


@dataclass(frozen=True)
class FileEntry:
    line: int
    text: str
    identity: ParsedIdentity


def parse_identity_file(text: str, default_ring: RingSpec | RingKind | str | None = None) -> list[FileEntry]:
    ring = _ring(default_ring) if default_ring is not None else None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        head, sep, rest = body.partition(":")
        if sep and head.strip().lower() == "ring":
            name = rest.strip().lower()
            try:
                ring = ring_make(name)
            except ValueError:
                col = body.index(rest.strip()) + 1 if rest.strip() else len(body) + 1
                raise ParseError(f"unknown ring {name!r}", lineno, col) from None
            continue
        if ring is None:
            raise ParseError("no ring selected (add a 'ring: <kind>' line)", lineno, 1)
        try:
            ident = parse_identity(body, ring)
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column) from None
        entries.append(FileEntry(lineno, body.strip(), ident))
    return entries


def load_identity_file(path, default_ring=None) -> list[FileEntry]:
    return parse_identity_file(Path(path).read_text(encoding="utf-8"), default_ring)
