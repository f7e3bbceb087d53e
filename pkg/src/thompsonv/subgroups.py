"""Explicit subgroup embeddings: shift and finitary permutations, a free
subgroup of rank two with closed-form distortion witnesses, and the doubling
construction for direct products.

The integers embed into the maximal prefix code a*ab U b*ba; the shift and
the finitary permutations of the integers then land in V, giving a copy of
the group generated by all finitary permutations together with the shift.

The two six-entry tables returned by :func:`free_generators` generate a free
group of rank two.  For a reduced word mu over them, the image of a single
short input word under mu has length exceeding the free length of mu, which
certifies that the table size of the maximally extended product exceeds the
free length: the subgroup is undistorted.  The witness images are assembled
from a fixed case table keyed by the signs of adjacent exponents, and are
checked against direct evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .tables import IDENTITY, Table, max_extend, multiply
from .words import ParseError

ALPHA = Table(
    ("a", "ba", "bbaaa", "bbaab", "bbab", "bbb"),
    ("bbbba", "bbbbb", "a", "ba", "bba", "bbba"))
BETA = Table(
    ("aaa", "aabaa", "aabab", "aabb", "ab", "b"),
    ("aaaa", "b", "ab", "aab", "aaabb", "aaaba"))

_ALPHA_INV = ALPHA.inverse()
_BETA_INV = BETA.inverse()

FreeWord = tuple[tuple[str, int], ...]

_LETTERS = ("alpha", "beta")


def free_generators() -> tuple[Table, Table]:
    """The pair of size-6 tables generating a free group of rank two."""
    return ALPHA, BETA


def shift_table() -> Table:
    """The table acting as z -> z + 1 on the embedded integers."""
    return Table(("aa", "ab", "b"), ("a", "ba", "bb"))


def int_embed(z: int) -> str:
    """Embed an integer into the code a*ab U b*ba: a^(1-z) b for z <= 0, b^z a else."""
    if z <= 0:
        return "a" * (1 - z) + "b"
    return "b" * z + "a"


def finitary_perm_table(perm: Mapping[int, int]) -> Table:
    """The element of V acting as the finitary permutation on embedded integers.

    ``perm`` lists the non-fixed points (fixed points may be included); it
    must be a bijection of its own support.  The table acts as the
    permutation on the embedded integers, is the identity on the rest of the
    code, and is returned maximally extended.
    """
    support = {z: w for z, w in perm.items() if z != w}
    if set(support) != set(support.values()):
        raise ValueError("mapping is not a bijection of a finite set of integers")
    if not support:
        return IDENTITY
    reach = max(abs(z) for z in set(support) | set(support.values()))
    dom = []
    img = []
    for z in range(-reach, reach + 2):
        dom.append(int_embed(z))
        img.append(int_embed(support.get(z, z)))
    for tail in ("a" * (reach + 2), "b" * (reach + 2)):
        dom.append(tail)
        img.append(tail)
    return max_extend(Table(dom, img))


def check_free_word(word: Iterable[tuple[str, int]]) -> FreeWord:
    """Validate a reduced free-group word: alternating letters, nonzero exponents."""
    blocks = tuple(word)
    for letter, exp in blocks:
        if letter not in _LETTERS:
            raise ValueError(f"unknown free generator {letter!r}")
        if exp == 0:
            raise ValueError("exponents must be nonzero in a reduced word")
    for i in range(len(blocks) - 1):
        if blocks[i][0] == blocks[i + 1][0]:
            raise ValueError("adjacent blocks must alternate letters")
    return blocks


def free_length(word: Iterable[tuple[str, int]]) -> int:
    return sum(abs(exp) for _, exp in word)


def _block_table(letter: str, sign: int) -> Table:
    if letter == "alpha":
        return ALPHA if sign > 0 else _ALPHA_INV
    return BETA if sign > 0 else _BETA_INV


def evaluate_free(word: Iterable[tuple[str, int]]) -> Table:
    """Multiply out a free-group word over the two generators (rightmost first)."""
    blocks = check_free_word(word)
    acc = IDENTITY
    for letter, exp in reversed(blocks):
        t = _block_table(letter, 1 if exp > 0 else -1)
        for _ in range(abs(exp)):
            acc = multiply(t, acc)
    return acc


def apply_free(word: Iterable[tuple[str, int]], x: str) -> str | None:
    """Apply a free-group word to a concrete word, one generator at a time."""
    blocks = check_free_word(word)
    for letter, exp in reversed(blocks):
        t = _block_table(letter, 1 if exp > 0 else -1)
        for _ in range(abs(exp)):
            nxt = t.apply(x)
            if nxt is None:
                return None
            x = nxt
    return x


@dataclass(frozen=True)
class WitnessPair:
    """Distortion witness: images of the two designated inputs share the
    prefix y, longer than the free length, and end in a and b respectively."""
    y: str
    inputs: tuple[str, str]
    images: tuple[str, str]


# Case table for the witness images, keyed by exponent signs.  A block
# contributes a boundary word followed by a single repeated letter; the
# boundary depends on the sign of the block and of the block to its left.
_BETA_AFTER_ALPHA = {(1, 1): "baaa", (1, -1): "baab",
                     (-1, 1): "aaaa", (-1, -1): "aaab"}
_ALPHA_AFTER_BETA = {(1, 1): "babb", (1, -1): "aabb",
                     (-1, 1): "baba", (-1, -1): "aaba"}
_BETA_LEADING = {1: "aaa", -1: "aab"}
_ALPHA_LEADING = {1: "bbb", -1: "bba"}
_TAIL_FIRST = {1: "ba", -1: "aa"}
_TAIL_SECOND = {1: "bb", -1: "ab"}


def closed_form_witness(word: Iterable[tuple[str, int]]) -> WitnessPair:
    """Assemble the witness images of a reduced free word without evaluating it.

    Words ending (rightmost block) in an alpha power take inputs (a, ba);
    words ending in a beta power take (b, ab).  The images agree except for
    their final letter, so they exhibit the common prefix y directly.
    """
    blocks = check_free_word(word)
    if not blocks:
        raise ValueError("the empty word has no distortion witness")
    parts: list[str] = []
    for i, (letter, exp) in enumerate(blocks):
        sign = 1 if exp > 0 else -1
        if letter == "beta":
            if i == 0:
                parts.append(_BETA_LEADING[sign])
            else:
                left_sign = 1 if blocks[i - 1][1] > 0 else -1
                parts.append(_BETA_AFTER_ALPHA[(left_sign, sign)])
            parts.append(("a" if sign > 0 else "b") * (abs(exp) - 1))
        else:
            if i == 0:
                parts.append(_ALPHA_LEADING[sign])
            else:
                left_sign = 1 if blocks[i - 1][1] > 0 else -1
                parts.append(_ALPHA_AFTER_BETA[(sign, left_sign)])
            parts.append(("a" if sign > 0 else "b") * (abs(exp) - 1))
    tail_sign = 1 if blocks[-1][1] > 0 else -1
    core = "".join(parts)
    first = core + _TAIL_FIRST[tail_sign]
    second = core + _TAIL_SECOND[tail_sign]
    inputs = ("a", "ba") if blocks[-1][0] == "alpha" else ("b", "ab")
    return WitnessPair(y=first[:-1], inputs=inputs, images=(first, second))


@dataclass(frozen=True)
class DistortionReport:
    word: FreeWord
    witness: WitnessPair
    free_length: int
    table_size: int
    closed_form_matches: bool
    witness_exceeds_free_length: bool
    table_size_exceeds_free_length: bool

    @property
    def all_ok(self) -> bool:
        return (self.closed_form_matches
                and self.witness_exceeds_free_length
                and self.table_size_exceeds_free_length)


def verify_distortion(word: Iterable[tuple[str, int]]) -> DistortionReport:
    """Check the three facts certifying linear distortion for one reduced word.

    (i) the closed-form images equal direct evaluation on the designated
    inputs, (ii) the witness is longer than the free length, and (iii) the
    table size of the maximally extended product exceeds the free length.
    """
    blocks = check_free_word(word)
    wit = closed_form_witness(blocks)
    direct = tuple(apply_free(blocks, x) for x in wit.inputs)
    flen = free_length(blocks)
    big = max_extend(evaluate_free(blocks))
    return DistortionReport(
        word=blocks,
        witness=wit,
        free_length=flen,
        table_size=big.size,
        closed_form_matches=direct == wit.images,
        witness_exceeds_free_length=len(wit.y) > flen,
        table_size_exceeds_free_length=big.size > flen,
    )


def double_a(g: Table) -> Table:
    """Copy of g acting inside the subtree under a, identity under b."""
    dom = tuple("a" + d for d in g.domain) + ("b",)
    img = tuple("a" + im for im in g.image) + ("b",)
    return max_extend(Table(dom, img, _trusted=True))


def double_b(g: Table) -> Table:
    """Copy of g acting inside the subtree under b, identity under a."""
    dom = ("a",) + tuple("b" + d for d in g.domain)
    img = ("a",) + tuple("b" + im for im in g.image)
    return max_extend(Table(dom, img, _trusted=True))


def product_size_check(g: Table, h: Table) -> bool:
    """Table size of double_a(g) * double_b(h) equals size(g) + size(h)."""
    g = max_extend(g)
    h = max_extend(h)
    if g.is_identity or h.is_identity:
        raise ValueError("the size claim presumes nontrivial elements")
    return multiply(double_a(g), double_b(h)).size == g.size + h.size


# -- text syntax ---------------------------------------------------------------
#
# free word  :=  (block whitespace)*      block  :=  ('a' | 'b') ('^' int)?
#
# Here 'a' stands for the first free generator and 'b' for the second;
# exponents may be negative and default to 1.


def parse_free_word(text: str) -> FreeWord:
    out: list[tuple[str, int]] = []
    pos = 0
    for token in text.split():
        pos = text.find(token, pos)
        letter = token[0]
        if letter not in "ab":
            raise ParseError(f"free-word blocks start with a or b, got {token!r}",
                             text, pos)
        exp = 1
        if len(token) > 1:
            if not token[1] == "^":
                raise ParseError(f"malformed block {token!r}", text, pos)
            try:
                exp = int(token[2:])
            except ValueError:
                raise ParseError(f"malformed exponent in {token!r}", text, pos) from None
        out.append(("alpha" if letter == "a" else "beta", exp))
    return check_free_word(out)


def format_free_word(word: Iterable[tuple[str, int]]) -> str:
    return " ".join(
        f"{'a' if letter == 'alpha' else 'b'}^{exp}" for letter, exp in word)
