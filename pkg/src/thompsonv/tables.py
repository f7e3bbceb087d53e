"""Elements of Thompson's group V as tables between maximal prefix codes.

A table is a bijection between two equal-size finite maximal prefix codes,
stored as two parallel tuples: the domain code in dictionary order and the
image of each domain word.  A table determines an isomorphism between the
essential right ideals generated by its codes; composing two tables and
taking the unique maximum extension of the result is the group operation.

Group elements are identified with maximally extended tables: ``max_extend``
removes sibling pairs (x a -> y a, x b -> y b are replaced by x -> y) until
none remain, and the result is independent of the removal order.
"""

from __future__ import annotations

import itertools
import json
import os
from bisect import bisect_left

from . import words
from .words import ParseError

_TABLE_ENUM_ENV = "THOMPSONV_MAX_TABLE_ENUM"
_DEFAULT_TABLE_ENUM_BOUND = 5


class Table:
    """A right-ideal isomorphism given by its finite table.

    ``domain`` and ``image`` are parallel tuples; ``domain`` is sorted in
    dictionary order.  Instances are immutable values: hashable, comparable,
    and safe to share.
    """

    __slots__ = ("domain", "image")

    domain: tuple[str, ...]
    image: tuple[str, ...]

    def __init__(self, domain, image, *, _trusted: bool = False) -> None:
        if _trusted:
            object.__setattr__(self, "domain", domain)
            object.__setattr__(self, "image", image)
            return
        dom_in = tuple(domain)
        img_in = tuple(image)
        if not dom_in or len(dom_in) != len(img_in):
            raise ValueError("domain and image must have equal positive length")
        pairs = sorted(zip(dom_in, img_in))
        dom = tuple(p[0] for p in pairs)
        img = tuple(p[1] for p in pairs)
        _check_maximal_sorted(dom, "domain")
        _check_maximal_sorted(tuple(sorted(img)), "image")
        if len(set(img)) != len(img):
            raise ValueError("image words must be pairwise distinct")
        object.__setattr__(self, "domain", dom)
        object.__setattr__(self, "image", img)

    def __setattr__(self, name, value):  # immutable value type
        raise AttributeError("Table is immutable")

    @property
    def size(self) -> int:
        """The table size: the common cardinality of the two codes."""
        return len(self.domain)

    @property
    def is_identity(self) -> bool:
        return self.domain == ("",) and self.image == ("",)

    def apply(self, w: str) -> str | None:
        """Image of ``w`` under the right-ideal map, or None where undefined.

        Defined exactly on the right ideal of the domain code: if w = p x for
        the (unique) domain word p, the image is image(p) x.
        """
        for d, im in zip(self.domain, self.image):
            if w.startswith(d):
                return im + w[len(d):]
        return None

    def inverse(self) -> "Table":
        pairs = sorted(zip(self.image, self.domain))
        return Table(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs),
                     _trusted=True)

    def __mul__(self, other: "Table") -> "Table":
        if not isinstance(other, Table):
            return NotImplemented
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Table)
                and self.domain == other.domain and self.image == other.image)

    def __hash__(self) -> int:
        return hash((self.domain, self.image))

    def __repr__(self) -> str:
        return format_table(self)


def _check_maximal_sorted(sorted_code: tuple[str, ...], which: str) -> None:
    if not sorted_code:
        raise ValueError(f"{which} code must be nonempty")
    for i in range(len(sorted_code) - 1):
        a, b = sorted_code[i], sorted_code[i + 1]
        if a == b:
            raise ValueError(f"{which} code repeats {a!r}")
        if b.startswith(a):
            raise ValueError(f"{which} code is not a prefix code: {a!r} < {b!r}")
    for w in sorted_code:
        words.check_word(w)
    depth = max(len(w) for w in sorted_code)
    if sum(1 << (depth - len(w)) for w in sorted_code) != 1 << depth:
        raise ValueError(f"{which} code is not maximal")


def validate(t: Table) -> None:
    """Re-run the full structural checks on a table (used by test sweeps)."""
    Table(t.domain, t.image)


IDENTITY = Table(("",), ("",))


def identity_table() -> Table:
    return IDENTITY


def apply(t: Table, w: str) -> str | None:
    return t.apply(w)


def compose(second: Table, first: Table) -> Table:
    """Functional composite second o first (first applied first).

    The composite is restricted to the largest right ideal where it is
    defined; its table is built by refining each entry of ``first`` against
    the quotient of ``second``'s domain code, so the result size is at most
    the sum of the two table sizes.  No maximum extension is taken.
    """
    dom2, img2 = second.domain, second.image
    index2 = {d: i for i, d in enumerate(dom2)}
    max2 = max(len(d) for d in dom2)
    out_d: list[str] = []
    out_i: list[str] = []
    for p, q in zip(first.domain, first.image):
        hit = None
        for cut in range(min(len(q), max2) + 1):
            hit = index2.get(q[:cut])
            if hit is not None:
                break
        if hit is not None:
            out_d.append(p)
            out_i.append(img2[hit] + q[len(dom2[hit]):])
        else:
            # q sits strictly above second's domain code; refine by its quotient.
            j = bisect_left(dom2, q)
            while j < len(dom2) and dom2[j].startswith(q):
                out_d.append(p + dom2[j][len(q):])
                out_i.append(img2[j])
                j += 1
    # first.domain is sorted and refinement preserves the order, so out_d is
    # sorted; the images are distinct because both inputs are bijections.
    assert len(set(out_i)) == len(out_i)
    return Table(tuple(out_d), tuple(out_i), _trusted=True)


def max_extend(t: Table) -> Table:
    """The unique maximum extension of the table.

    Scans the domain in dictionary order, where a reducible sibling pair is
    always adjacent, and collapses pairs x a -> y a, x b -> y b to x -> y
    with a stack so that cascading reductions are caught in one pass.  The
    outcome is order-independent.
    """
    stack: list[tuple[str, str]] = []
    for pair in zip(t.domain, t.image):
        stack.append(pair)
        while len(stack) >= 2:
            d1, i1 = stack[-2]
            d2, i2 = stack[-1]
            if (d1 and d2 and i1 and i2
                    and d1[-1] == "a" and d2[-1] == "b"
                    and i1[-1] == "a" and i2[-1] == "b"
                    and d1[:-1] == d2[:-1] and i1[:-1] == i2[:-1]):
                stack[-2:] = [(d1[:-1], i1[:-1])]
            else:
                break
    if len(stack) == t.size:
        return t
    return Table(tuple(p[0] for p in stack), tuple(p[1] for p in stack),
                 _trusted=True)


def multiply(second: Table, first: Table) -> Table:
    """The group operation of V: maximum extension of the composite."""
    return max_extend(compose(second, first))


def invert(t: Table) -> Table:
    return t.inverse()


def equal_in_v(t1: Table, t2: Table) -> bool:
    """Whether two tables represent the same element of V."""
    return max_extend(t1) == max_extend(t2)


def restrict(t: Table, p: str, code) -> Table:
    """Replace the entry at domain word p by its refinement along a maximal code.

    The entry p -> q becomes {p z -> q z : z in code}; the result is a table
    congruent to ``t`` (same maximum extension).
    """
    i = bisect_left(t.domain, p)
    if i >= t.size or t.domain[i] != p:
        raise ValueError(f"{p!r} is not in the domain code")
    q = t.image[i]
    refinement = words.as_code(code)
    if not words.is_maximal_prefix_code(refinement):
        raise ValueError(f"refinement code {refinement!r} is not maximal")
    dom = list(t.domain[:i]) + [p + z for z in refinement] + list(t.domain[i + 1:])
    img = list(t.image[:i]) + [q + z for z in refinement] + list(t.image[i + 1:])
    return Table(dom, img)


def preserves_dict_order(t: Table) -> bool:
    """Membership test for the subgroup F of order-preserving elements."""
    return all(t.image[i] < t.image[i + 1] for i in range(t.size - 1))


def longest_entry(t: Table) -> int:
    """Maximum word length over both codes; at most size - 1."""
    return max(max(len(w) for w in t.domain), max(len(w) for w in t.image))


def table_enumeration_bound() -> int:
    return int(os.environ.get(_TABLE_ENUM_ENV, _DEFAULT_TABLE_ENUM_BOUND))


def _is_reduced(domain: tuple[str, ...], image: tuple[str, ...]) -> bool:
    for i in range(len(domain) - 1):
        d1, d2 = domain[i], domain[i + 1]
        i1, i2 = image[i], image[i + 1]
        if (d1 and d2 and i1 and i2
                and d1[-1] == "a" and d2[-1] == "b"
                and i1[-1] == "a" and i2[-1] == "b"
                and d1[:-1] == d2[:-1] and i1[:-1] == i2[:-1]):
            return False
    return True


def enumerate_elements(n: int) -> list[Table]:
    """All maximally extended tables of table size exactly n, each once.

    Runs over all pairs of maximal prefix codes of size n and all bijections
    between them, keeping the tables with no reducible sibling pair.
    Bounded by THOMPSONV_MAX_TABLE_ENUM (default 5).
    """
    if n < 1:
        raise ValueError(f"table size must be positive, got {n}")
    bound = table_enumeration_bound()
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: {n} > {bound}")
    codes = words.enumerate_maximal_codes(n)
    out = []
    for dom in codes:
        for rng in codes:
            for perm in itertools.permutations(rng):
                if _is_reduced(dom, perm):
                    out.append(Table(dom, perm, _trusted=True))
    return out


# -- text and JSON forms -------------------------------------------------------
#
# table  :=  '[' entry (',' entry)* ']'      entry  :=  word '->' word


def format_table(t: Table, compress_over: int = 4) -> str:
    return "[" + ", ".join(
        f"{words.format_word(d, compress_over)}->{words.format_word(im, compress_over)}"
        for d, im in zip(t.domain, t.image)) + "]"


def parse_table(text: str) -> Table:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("table literal must be enclosed in brackets", text, 0)
    inner = s[1:-1].strip()
    if not inner:
        raise ParseError("table literal must have at least one entry", text, 1)
    dom: list[str] = []
    img: list[str] = []
    for part in inner.split(","):
        entry = part.strip()
        if "->" not in entry:
            raise ParseError("entry must be of the form word->word",
                             text, text.find(part))
        left, right = entry.split("->", 1)
        dom.append(words.parse_word(left.strip()))
        img.append(words.parse_word(right.strip()))
    return Table(dom, img)


def to_json_dict(t: Table) -> dict:
    """JSON form: parallel arrays in domain dictionary order, literal words."""
    return {"domain": list(t.domain), "range": list(t.image)}


def from_json_dict(data: dict) -> Table:
    return Table(tuple(data["domain"]), tuple(data["range"]))


def to_json(t: Table) -> str:
    return json.dumps(to_json_dict(t))


def from_json(text: str) -> Table:
    return from_json_dict(json.loads(text))
