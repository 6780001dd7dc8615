"""Multivariate polynomials over Q with exact rational coefficients.

A monomial is a tuple of non-negative integer exponents, one per variable.
A polynomial is a map monomial -> nonzero Fraction.  Everything is immutable
after construction; arithmetic returns new objects.  Canonical printing and
leading-term extraction use graded lexicographic order; Groebner code picks
its own orders via the key functions below.
"""

from __future__ import annotations

import re
from fractions import Fraction

Mono = tuple[int, ...]


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1: Mono, m2: Mono) -> bool:
    """True if m1 divides m2."""
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1: Mono, m2: Mono) -> Mono:
    """m1 / m2, assuming divisibility."""
    return tuple(a - b for a, b in zip(m1, m2))


def mono_lcm(m1: Mono, m2: Mono) -> Mono:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def grlex_key(m: Mono):
    """Graded lexicographic sort key (larger key = larger monomial)."""
    return (sum(m), m)


def grevlex_key(m: Mono):
    """Graded reverse lexicographic sort key."""
    return (sum(m), tuple(-e for e in reversed(m)))


def elimination_key(nblock: int):
    """Block order eliminating the first `nblock` variables.

    Monomials are compared by grevlex on the leading block first, then
    grevlex on the rest.  A polynomial whose leading monomial avoids the
    first block lies entirely in the remaining variables.
    """

    def key(m: Mono):
        return (grevlex_key(m[:nblock]), grevlex_key(m[nblock:]))

    return key


class Poly:
    """Polynomial with Fraction coefficients in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: dict[Mono, Fraction]):
        # terms must already be normalized: no zero coefficients.
        self.nvars = nvars
        self.terms = terms
        self._hash = None

    # ----- constructors -----

    @staticmethod
    def zero(nvars: int) -> Poly:
        return Poly(nvars, {})

    @staticmethod
    def constant(c, nvars: int) -> Poly:
        c = Fraction(c)
        return Poly(nvars, {} if c == 0 else {(0,) * nvars: c})

    @staticmethod
    def variable(i: int, nvars: int) -> Poly:
        m = tuple(1 if k == i else 0 for k in range(nvars))
        return Poly(nvars, {m: Fraction(1)})

    @staticmethod
    def monomial(m: Mono, c=1) -> Poly:
        c = Fraction(c)
        return Poly(len(m), {} if c == 0 else {m: c})

    @staticmethod
    def from_terms(nvars: int, raw: dict[Mono, Fraction]) -> Poly:
        return Poly(nvars, {m: c for m, c in raw.items() if c != 0})

    # ----- predicates and metadata -----

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def leading(self, key=grevlex_key) -> tuple[Mono, Fraction]:
        """Leading (monomial, coefficient) under the given order key."""
        m = max(self.terms, key=key)
        return m, self.terms[m]

    # ----- arithmetic -----

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __sub__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict[Mono, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = out.get(m, 0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
            return Poly(self.nvars, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, m: Mono, c=1) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {mono_mul(t, m): c * v for t, v in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for e, p in zip(m, point):
                if e:
                    v *= Fraction(p) ** e
            total += v
        return total

    # ----- equality / hashing -----

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # ----- formatting -----

    def format(self, varnames) -> str:
        """Render in the shared text grammar, terms in descending grlex order."""
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(varnames, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            coeff = abs(c)
            if not body:
                text = str(coeff)
            elif coeff == 1:
                text = body
            else:
                text = f"{coeff}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"Poly({self.format(names)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            from .errors import ParseError

            where = pos + len(text[pos:]) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", where)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


def parse_poly(text: str, varnames, homogeneous: bool = False) -> Poly:
    """Parse the polynomial grammar over the given variables.

    Terms are joined by + and -; a term is a coefficient (`int` or
    `int/int`), optional `*`, and variables with optional `^exp`.
    Whitespace is insignificant and `*` between factors is optional.
    With homogeneous=True, mixed-degree input is rejected and the two
    offending degrees are reported.
    """
    from .errors import ParseError, ValidationError

    varindex = {name: i for i, name in enumerate(varnames)}
    nvars = len(varnames)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text", 0)

    terms: dict[Mono, Fraction] = {}
    i = 0

    def term_end(k: int) -> bool:
        return k >= len(tokens) or (tokens[k][0] == "op" and tokens[k][1] in "+-")

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if term_end(i):
            pos = tokens[i - 1][2] if i > 0 else 0
            raise ParseError("expected a term", pos)

        coeff = Fraction(sign)
        exps = [0] * nvars
        expect_factor = True
        while not term_end(i):
            kind, value, pos = tokens[i]
            if kind == "op":
                if value == "*":
                    if expect_factor:
                        raise ParseError("unexpected '*'", pos)
                    expect_factor = True
                    i += 1
                    continue
                raise ParseError(f"unexpected operator {value!r}", pos)
            if kind == "int":
                num = int(value)
                i += 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "/":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "int":
                        raise ParseError("expected denominator after '/'", pos)
                    den = int(tokens[i][1])
                    if den == 0:
                        raise ParseError("zero denominator", tokens[i][2])
                    coeff *= Fraction(num, den)
                    i += 1
                else:
                    coeff *= num
                expect_factor = False
                continue
            # variable factor
            if value not in varindex:
                raise ParseError(f"unknown variable {value!r}", pos)
            exp = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    p = tokens[i][2] if i < len(tokens) else pos
                    raise ParseError("expected integer exponent after '^'", p)
                exp = int(tokens[i][1])
                i += 1
            exps[varindex[value]] += exp
            expect_factor = False

        if expect_factor:
            raise ParseError("dangling operator at end of term", tokens[i - 1][2])
        if coeff != 0:
            m = tuple(exps)
            s = terms.get(m, 0) + coeff
            if s:
                terms[m] = s
            else:
                del terms[m]

    result = Poly(nvars, terms)
    if homogeneous and not result.is_homogeneous():
        degs = sorted({sum(m) for m in result.terms})
        raise ValidationError(
            f"polynomial is not homogeneous: found terms of degrees {degs[0]} and {degs[1]}"
        )
    return result
