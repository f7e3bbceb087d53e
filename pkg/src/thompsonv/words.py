"""Words over the two-letter alphabet {a, b}, prefix codes, and maximal prefix codes.

Words are plain Python strings over the letters ``a`` and ``b``; the empty
string is the empty word.  On such strings the builtin comparison coincides
with the dictionary order used throughout this package: a word precedes all
of its extensions, and otherwise the first differing letter decides, with
``a`` before ``b``.

A prefix code is a finite antichain under the prefix order, represented as a
tuple of words sorted in dictionary order.  A prefix code is *maximal* when
it cuts the full binary tree of words, i.e. every word is prefix-comparable
to some code word; equivalently every internal vertex of its prefix tree has
exactly two children.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterable, Mapping

ALPHABET = ("a", "b")

_CODE_ENUM_ENV = "THOMPSONV_MAX_CODE_ENUM"
_DEFAULT_CODE_ENUM_BOUND = 12


class ParseError(ValueError):
    """Raised on malformed textual input; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def check_word(w: str) -> str:
    """Validate that ``w`` uses only the letters a and b; return it unchanged."""
    if not isinstance(w, str) or w.strip("ab"):
        raise ValueError(f"not a word over {{a, b}}: {w!r}")
    return w


def is_prefix(u: str, v: str) -> bool:
    """True iff v = u x for some word x (every word is a prefix of itself)."""
    return v.startswith(u)


def strip_prefix(u: str, v: str) -> str | None:
    """The residual x with v = u x, or None when u is not a prefix of v."""
    if v.startswith(u):
        return v[len(u):]
    return None


def are_prefix_comparable(u: str, v: str) -> bool:
    return u.startswith(v) or v.startswith(u)


def dict_compare(u: str, v: str) -> int:
    """Dictionary-order comparison: -1, 0 or 1.

    A prefix precedes its extensions; prefix-incomparable words compare by
    their first differing letter (a < b).  This is exactly the builtin
    string order for words over {a, b}.
    """
    if u == v:
        return 0
    return -1 if u < v else 1


def is_prefix_code(words: Iterable[str]) -> bool:
    """True iff no word of the set is a strict prefix of another."""
    ws = sorted(set(words))
    # In sorted order a prefix violation always shows up between neighbours.
    return all(not ws[i + 1].startswith(ws[i]) for i in range(len(ws) - 1))


def is_maximal_prefix_code(words: Iterable[str]) -> bool:
    """True iff the set is a prefix code cutting the full binary tree.

    A nonempty antichain is maximal exactly when its Kraft sum
    ``sum(2**-len(w))`` equals 1; {epsilon} is the minimal maximal code and
    the empty set is not maximal.
    """
    ws = sorted(set(words))
    if not ws:
        return False
    if any(ws[i + 1].startswith(ws[i]) for i in range(len(ws) - 1)):
        return False
    depth = max(len(w) for w in ws)
    return sum(1 << (depth - len(w)) for w in ws) == 1 << depth


def as_code(words: Iterable[str]) -> tuple[str, ...]:
    """Canonicalize a set of words into a sorted prefix-code tuple.

    Raises ValueError when the set is not an antichain.
    """
    ws = tuple(sorted({check_word(w) for w in words}))
    for i in range(len(ws) - 1):
        if ws[i + 1].startswith(ws[i]):
            raise ValueError(
                f"not a prefix code: {ws[i]!r} is a strict prefix of {ws[i + 1]!r}")
    return ws


def quotient(x: str, words: Iterable[str]) -> tuple[str, ...]:
    """The left quotient {w : x w in words}, sorted.

    When ``words`` is a maximal prefix code the result is empty or again a
    maximal prefix code.
    """
    n = len(x)
    return tuple(sorted(w[n:] for w in words if w.startswith(x)))


def ideal_intersection_code(p: Iterable[str], q: Iterable[str]) -> tuple[str, ...]:
    """The prefix code R with R{a,b}* equal to the intersection of the two ideals.

    For maximal prefix codes P and Q the result is the unique maximal prefix
    code generating the intersection; it is contained in P union Q, so its
    size is at most |P| + |Q|.
    """
    ps = as_code(p)
    qs = as_code(q)
    candidates = sorted(
        {w for w in ps if any(w.startswith(x) for x in qs)}
        | {w for w in qs if any(w.startswith(x) for x in ps)})
    out: list[str] = []
    for w in candidates:
        if not (out and w.startswith(out[-1])):
            out.append(w)
    return tuple(out)


def combine_codes(x_code: Iterable[str],
                  family: Mapping[str, Iterable[str]]) -> tuple[str, ...]:
    """The union of x Q_x over x in the code, one prefix code Q_x per word.

    The result is a prefix code, maximal whenever the base code and every
    member of the family are maximal.
    """
    xs = as_code(x_code)
    missing = [x for x in xs if x not in family]
    if missing:
        raise ValueError(f"family misses codes for {missing!r}")
    out: list[str] = []
    for x in xs:
        out.extend(x + z for z in as_code(family[x]))
    return as_code(out)


def right_ideal_basis(generators: Iterable[str]) -> tuple[str, ...]:
    """The unique prefix code generating the same right ideal as ``generators``.

    Keeps exactly the words with no strict prefix in the set.
    """
    gs = sorted({check_word(w) for w in generators})
    out: list[str] = []
    for w in gs:
        if not (out and w.startswith(out[-1])):
            out.append(w)
    return tuple(out)


def code_enumeration_bound() -> int:
    return int(os.environ.get(_CODE_ENUM_ENV, _DEFAULT_CODE_ENUM_BOUND))


def enumerate_maximal_codes(n: int) -> list[tuple[str, ...]]:
    """All maximal prefix codes of cardinality n, each exactly once.

    The count is the Catalan number C(n-1).  Bounded by the
    THOMPSONV_MAX_CODE_ENUM environment variable (default 12).
    """
    if n < 1:
        raise ValueError(f"code size must be positive, got {n}")
    bound = code_enumeration_bound()
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: {n} > {bound}")
    return [tuple(c) for c in _codes(n)]


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[tuple[str, ...], ...]:
    if n == 1:
        return (("",),)
    out = []
    for left in range(1, n):
        for lc in _codes(left):
            for rc in _codes(n - left):
                out.append(tuple(itertools.chain(
                    ("a" + w for w in lc), ("b" + w for w in rc))))
    return tuple(out)


# -- text syntax --------------------------------------------------------------
#
# word  :=  'e'  |  run+          run  :=  ('a' | 'b') ('^' int)?
#
# 'e' denotes the empty word; '^' exponents repeat the preceding letter and
# must be >= 1.  A '^' followed by '-' is never part of a word (it marks the
# inverse in the algebra syntax), so parsing stops there.


def parse_word(text: str) -> str:
    w, pos = _scan_word(text, 0)
    if pos != len(text):
        raise ParseError("trailing characters after word", text, pos)
    return w


def _scan_word(text: str, pos: int) -> tuple[str, int]:
    """Scan one word starting at pos; return (word, next position)."""
    if pos < len(text) and text[pos] == "e":
        return "", pos + 1
    parts: list[str] = []
    while pos < len(text) and text[pos] in "ab":
        letter = text[pos]
        pos += 1
        if pos < len(text) and text[pos] == "^" and pos + 1 < len(text) and text[pos + 1].isdigit():
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            count = int(text[pos + 1:end])
            if count < 1:
                raise ParseError("exponent must be >= 1", text, pos + 1)
            parts.append(letter * count)
            pos = end
        else:
            parts.append(letter)
    if not parts:
        raise ParseError("expected a word over {a, b} or 'e'", text, pos)
    return "".join(parts), pos


def format_word(w: str, compress_over: int = 4) -> str:
    """Render a word; words longer than ``compress_over`` use run syntax a^k."""
    if w == "":
        return "e"
    if len(w) <= compress_over:
        return w
    return "".join(
        letter if n == 1 else f"{letter}^{n}"
        for letter, n in ((k, len(list(g))) for k, g in itertools.groupby(w)))


def parse_code(text: str) -> tuple[str, ...]:
    """Parse a braced comma-separated code literal like ``{aa, ab, b}``."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError("code literal must be enclosed in braces", text, 0)
    inner = s[1:-1].strip()
    if not inner:
        return ()
    return as_code(parse_word(part.strip()) for part in inner.split(","))


def format_code(code: Iterable[str], compress_over: int = 4) -> str:
    return "{" + ", ".join(format_word(w, compress_over) for w in sorted(set(code))) + "}"
