"""The polycyclic monoid on two generators and its monoid algebra over Q.

Every nonzero, non-unit element of the polycyclic monoid is a monomial
y x^-1 with y, x words over {a, b}; the product of two monomials is governed
by prefix comparison (x^-1 y cancels to a word when one of x, y is a prefix
of the other, and is zero otherwise).  Algebra elements are finite formal
sums of monomials with exact rational coefficients.

A table corresponds to the unary sum of its entries: the sum of
image(x) x^-1 over the domain code.  That correspondence turns composition
into multiplication, and maximum extension into rewriting with the relation
a a^-1 + b b^-1 -> 1 applied to sibling term pairs, so equality in V matches
congruence of unary sums modulo the ideal generated by a a^-1 + b b^-1 - 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from . import words
from .tables import Table, max_extend
from .words import ParseError


class Monomial(NamedTuple):
    """The monomial y x^-1; the pair of empty words is the unit."""
    y: str
    x: str


UNIT = Monomial("", "")


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Product (y1 x1^-1)(y2 x2^-1); None encodes the zero of the monoid.

    The inner factor x1^-1 y2 cancels when x1 and y2 are prefix-comparable
    and annihilates the product otherwise.
    """
    if m2.y.startswith(m1.x):
        return Monomial(m1.y + m2.y[len(m1.x):], m2.x)
    if m1.x.startswith(m2.y):
        return Monomial(m1.y, m2.x + m1.x[len(m2.y):])
    return None


class AlgebraElement:
    """A finite formal sum of monomials with nonzero rational coefficients.

    Immutable; the empty sum is the zero of the algebra.  Supports +, -,
    scalar multiples and the bilinear product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(*mono)
            words.check_word(mono.y)
            words.check_word(mono.x)
            c = acc.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls([(UNIT, 1)])

    @classmethod
    def monomial(cls, y: str, x: str, coeff=1) -> "AlgebraElement":
        return cls([(Monomial(y, x), coeff)])

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: dictionary order on x, then on y."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].x, kv[0].y))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            s = acc.get(mono, Fraction(0)) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        return AlgebraElement(acc)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, coeff) -> "AlgebraElement":
        c = Fraction(coeff)
        if not c:
            return AlgebraElement()
        return AlgebraElement({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return format_sum(self)


def multiply(s1: AlgebraElement, s2: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the monomial product, collecting coefficients."""
    acc: dict[Monomial, Fraction] = {}
    for m1, c1 in s1._terms.items():
        for m2, c2 in s2._terms.items():
            m = mono_mul(m1, m2)
            if m is None:
                continue
            s = acc.get(m, Fraction(0)) + c1 * c2
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return AlgebraElement(acc)


def star(s: AlgebraElement) -> AlgebraElement:
    """The involution swapping y and x in every monomial."""
    return AlgebraElement({Monomial(m.x, m.y): c for m, c in s._terms.items()})


def is_unary_sum(s: AlgebraElement, require_maximal: bool = False) -> bool:
    """Whether s is a sum of distinct monomials with unit coefficients whose
    x-words and y-words each form a prefix code, paired bijectively."""
    if s.is_zero:
        return False
    xs = []
    ys = []
    for mono, coeff in s._terms.items():
        if coeff != 1:
            return False
        xs.append(mono.x)
        ys.append(mono.y)
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        return False
    check = words.is_maximal_prefix_code if require_maximal else words.is_prefix_code
    return check(xs) and check(ys)


def sigma_of(t: Table) -> AlgebraElement:
    """The unary sum of a table: sum of image(x) x^-1 over the domain code."""
    return AlgebraElement([(Monomial(im, d), 1) for d, im in zip(t.domain, t.image)])


def phi_of(s: AlgebraElement) -> Table:
    """The table of a maximal unary sum; inverse of :func:`sigma_of`.

    The correspondence is a homomorphism: the table of a product of unary
    sums is the composite of the tables.
    """
    if not is_unary_sum(s, require_maximal=True):
        raise ValueError("not a unary sum over maximal prefix codes")
    pairs = sorted((m.x, m.y) for m in s._terms)
    return Table(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs),
                 _trusted=True)


def unary_multiply(s2: AlgebraElement, s1: AlgebraElement) -> AlgebraElement:
    """Product of two unary sums via prefix matching of the middle codes.

    Splits the nonzero products into exact matches, refinements of the left
    factor and refinements of the right factor; equals the bilinear product
    and stays unary.  An independent route to :func:`multiply` for unary
    sums.
    """
    for s in (s2, s1):
        if not is_unary_sum(s):
            raise ValueError("both factors must be unary sums")
    left = sorted((m.x, m.y) for m in s2._terms)   # pairs (x_j, y_j)
    right = sorted((m.y, m.x) for m in s1._terms)  # pairs (v_i, u_i)
    terms: list[Monomial] = []
    right_by_v = {v: u for v, u in right}
    left_by_x = {x: y for x, y in left}
    # exact and left-refined matches: x_j extends some v_i
    for x_j, y_j in left:
        for cut in range(len(x_j) + 1):
            u = right_by_v.get(x_j[:cut])
            if u is not None:
                terms.append(Monomial(y_j, u + x_j[cut:]))
                break
    # right-refined matches: v_i strictly extends some x_j
    for v_i, u_i in right:
        for cut in range(len(v_i)):
            y = left_by_x.get(v_i[:cut])
            if y is not None:
                terms.append(Monomial(y + v_i[cut:], u_i))
                break
    return AlgebraElement([(m, 1) for m in terms])


def reduce_mod_iv(s: AlgebraElement) -> AlgebraElement:
    """Normal form modulo the relation a a^-1 + b b^-1 -> 1.

    Repeatedly replaces a sibling pair of terms
    (y a)(x a)^-1 + (y b)(x b)^-1 by y x^-1 until no pair remains; the
    result is the unary sum of the maximum extension of the corresponding
    table, so the rewriting is confluent.
    """
    if not is_unary_sum(s, require_maximal=True):
        raise ValueError("reduction applies to unary sums over maximal codes")
    pairs = sorted((m.x, m.y) for m in s._terms)
    stack: list[tuple[str, str]] = []
    for pair in pairs:
        stack.append(pair)
        while len(stack) >= 2:
            x1, y1 = stack[-2]
            x2, y2 = stack[-1]
            if (x1 and x2 and y1 and y2
                    and x1[-1] == "a" and x2[-1] == "b"
                    and y1[-1] == "a" and y2[-1] == "b"
                    and x1[:-1] == x2[:-1] and y1[:-1] == y2[:-1]):
                stack[-2:] = [(x1[:-1], y1[:-1])]
            else:
                break
    return AlgebraElement([(Monomial(y, x), 1) for x, y in stack])


def reduce_via_tables(s: AlgebraElement) -> AlgebraElement:
    """Reference reduction through the table correspondence."""
    return sigma_of(max_extend(phi_of(s)))


def is_congruent(s1: AlgebraElement, s2: AlgebraElement) -> bool:
    """Equality modulo the ideal generated by a a^-1 + b b^-1 - 1."""
    return reduce_mod_iv(s1) == reduce_mod_iv(s2)


# -- text syntax ---------------------------------------------------------------
#
# sum   :=  '0'  |  term (' + ' term)*
# term  :=  coeff? atom          coeff  :=  int | int '/' int
# atom  :=  '1'  |  word word '^-1'
#
# Words follow the run syntax of the words module, with 'e' for the empty
# word; the two words of a monomial are separated by whitespace.


def format_sum(s: AlgebraElement, compress_over: int = 4) -> str:
    if s.is_zero:
        return "0"
    parts = []
    for mono, coeff in s.items():
        atom = ("1" if mono == UNIT else
                f"{words.format_word(mono.y, compress_over)} "
                f"{words.format_word(mono.x, compress_over)}^-1")
        if coeff == 1:
            parts.append(atom)
        else:
            c = str(coeff)
            parts.append(f"{c} {atom}")
    return " + ".join(parts)


def parse_sum(text: str) -> AlgebraElement:
    stripped = text.strip()
    if stripped == "0":
        return AlgebraElement.zero()
    terms: list[tuple[Monomial, Fraction]] = []
    pos = 0
    for chunk in stripped.split(" + "):
        pos = text.find(chunk, pos)
        tokens = chunk.split()
        if not tokens:
            raise ParseError("empty term", text, pos)
        coeff = Fraction(1)
        if len(tokens) > 1 and (tokens[0][0].isdigit() or tokens[0][0] == "-"):
            try:
                coeff = Fraction(tokens[0])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"malformed coefficient {tokens[0]!r}",
                                 text, pos) from None
            tokens = tokens[1:]
        if tokens == ["1"]:
            terms.append((UNIT, coeff))
            continue
        if len(tokens) != 2 or not tokens[1].endswith("^-1"):
            raise ParseError("expected 'y x^-1' or '1'", text, pos)
        y = words.parse_word(tokens[0])
        x = words.parse_word(tokens[1][:-3])
        terms.append((Monomial(y, x), coeff))
    return AlgebraElement(terms)
