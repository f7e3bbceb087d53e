"""Canonical factorization and compilation of elements into generator words.

Every non-identity element g factors uniquely as beta * pi * alpha where
alpha and beta preserve the dictionary order and pi permutes a fixed
reference code of cardinality equal to the table size of g.  The reference
codes are balanced, with all words of two adjacent lengths, so the
permutation part decomposes into transpositions whose parameters are
logarithmic in the table size; order-preserving elements compile to words
over sigma and theta of linear length.  Together this compiles any table to
a generator word of length O(n log n) in the table size n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import words
from .generators import GenWord, free_reduce
from .tables import Table, max_extend, preserves_dict_order


@dataclass(frozen=True)
class Factorization:
    """g = beta * pi * alpha with alpha, beta order-preserving."""
    alpha: Table
    pi: Table
    beta: Table


@dataclass(frozen=True)
class Transposition:
    """The involution of V swapping a^k with w, identity elsewhere."""
    k: int
    w: str

    def table(self) -> Table:
        return transposition_table(self.k, self.w)


def balanced_code(n: int) -> tuple[str, ...]:
    """The reference maximal prefix code of cardinality n.

    All words have length k-1 or k with k = ceil(log2 n); the deep leaves
    occupy the dictionary-least positions, so the first word is a power of a.
    """
    if n < 1:
        raise ValueError(f"cardinality must be positive, got {n}")
    if n == 1:
        return ("",)
    k = (n - 1).bit_length()
    deep = n - (1 << (k - 1))
    out: list[str] = []
    for i, prefix in enumerate("".join(p) for p in itertools.product("ab", repeat=k - 1)):
        if i < deep:
            out.append(prefix + "a")
            out.append(prefix + "b")
        else:
            out.append(prefix)
    return tuple(out)


def order_iso(p, q) -> Table:
    """The unique dictionary-order-preserving bijection between two codes.

    Both arguments must be maximal prefix codes of equal size; the result
    pairs them in sorted order and is a table of an element of F.
    """
    ps = tuple(sorted(p))
    qs = tuple(sorted(q))
    if len(ps) != len(qs):
        raise ValueError(f"code sizes differ: {len(ps)} != {len(qs)}")
    return Table(ps, qs)


def canonical_factor(g: Table) -> Factorization:
    """Factor g as beta * pi * alpha over the balanced reference code.

    alpha maps the domain code of g onto the reference code order-preservingly,
    beta maps the reference code onto the image code, and pi is the permutation
    of the reference code induced by g.  All three table sizes equal the table
    size of g.
    """
    g = max_extend(g)
    n = g.size
    ref = balanced_code(n)
    alpha = order_iso(g.domain, ref)
    sorted_image = sorted(g.image)
    beta = order_iso(ref, sorted_image)
    rank = {w: i for i, w in enumerate(sorted_image)}
    pi_image = tuple(ref[rank[im]] for im in g.image)
    return Factorization(alpha=alpha, pi=Table(ref, pi_image, _trusted=True),
                         beta=beta)


def left_edge_exponent(code, leaf: int) -> int:
    """Length of the longest all-left-edge ascent from a leaf of the prefix tree.

    Leaves are numbered in dictionary order.  The ascent climbs while the
    current vertex is an a-child, and its end vertex must carry a label
    outside b* (the empty word counts as b^0).  The rightmost leaf always
    yields 0.
    """
    ws = tuple(sorted(code))
    if not 0 <= leaf < len(ws):
        raise ValueError(f"leaf index {leaf} out of range for {len(ws)} leaves")
    w = ws[leaf]
    trailing = len(w) - len(w.rstrip("a"))
    if trailing == 0:
        return 0
    head = w[:len(w) - trailing]
    if head.strip("b"):
        return trailing
    return trailing - 1


def f_word(g: Table) -> GenWord:
    """Compile an order-preserving element into a word over sigma and theta.

    The exponents are the all-left-edge ascent counts of the two codes; the
    emitted word is freely reduced and has length below 4 times the table
    size.  Raises ValueError when the element does not preserve the
    dictionary order.
    """
    t = max_extend(g)
    if not preserves_dict_order(t):
        raise ValueError("element does not preserve the dictionary order")
    if t.is_identity:
        return ()
    top = t.size - 1
    image_code = tuple(sorted(t.image))
    syms: list[tuple[str, int]] = []
    for i in range(top + 1):
        syms.extend(_x_power(i, left_edge_exponent(image_code, i)))
    for i in range(top, -1, -1):
        syms.extend(_x_power(i, -left_edge_exponent(t.domain, i)))
    return free_reduce(syms)


def _x_power(i: int, e: int) -> list[tuple[str, int]]:
    # X_0 = sigma^-1 and X_i = sigma^(i-1) theta^-1 sigma^(1-i) for i >= 1
    if e == 0:
        return []
    if i == 0:
        return [("sigma", -1 if e > 0 else 1)] * abs(e)
    inner = [("theta", -1 if e > 0 else 1)] * abs(e)
    return ([("sigma", 1)] * (i - 1) + inner + [("sigma", -1)] * (i - 1))


def _check_transposition(k: int, w: str) -> None:
    words.check_word(w)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not w.strip("a"):
        raise ValueError(f"swapped word must not be a power of a: {w!r}")
    ak = "a" * k
    if w.startswith(ak) or ak.startswith(w):
        raise ValueError(f"{w!r} is prefix-comparable with a^{k}")


def transposition_table(k: int, w: str) -> Table:
    """The table of the transposition swapping a^k and w.

    With w = a^j b v, the table fixes a^i b for i < k, i != j, and fixes
    a^j b p l for every strict prefix p of v, where l is the letter making
    p l fall off v.  The result is maximal and an involution.
    """
    _check_transposition(k, w)
    j = w.index("b")
    v = w[j + 1:]
    stem = w[:j + 1]
    dom = ["a" * k, w]
    img = [w, "a" * k]
    for i in range(k):
        if i != j:
            fixed = "a" * i + "b"
            dom.append(fixed)
            img.append(fixed)
    for cut in range(len(v)):
        off = "a" if v[cut] == "b" else "b"
        fixed = stem + v[:cut] + off
        dom.append(fixed)
        img.append(fixed)
    return Table(dom, img)


def transposition_word(k: int, w: str) -> GenWord:
    """Generator word for the transposition (a^k | w).

    Recursive conjugation: shapes starting with b are rotated by sigma into
    shapes starting with a; those are shortened via delta, gamma1 and gamma2
    until one of the transposition generators is reached.  The word length is
    linear in k + len(w).
    """
    _check_transposition(k, w)
    if w[0] == "b":
        h = len(w) - len(w.lstrip("b"))
        rest = w[h:]
        if rest == "":
            if h == 1:
                if k == 1:
                    return (("tp_swap", 1),)
                return ((("tp_abb", 1),)
                        + transposition_word(k, "ab")
                        + (("tp_abb", 1),))
            return ((("sigma", 1),)
                    + transposition_word(k + 1, "b" * (h - 1))
                    + (("sigma", -1),))
        if h == 1:
            return ((("sigma", 1),)
                    + transposition_word(k + 1, "ab" + rest[1:])
                    + (("sigma", -1),))
        return ((("sigma", 1),)
                + transposition_word(k + 1, "b" * (h - 1) + rest)
                + (("sigma", -1),))
    j = len(w) - len(w.lstrip("a"))
    after = w[j:]
    h = len(after) - len(after.lstrip("b"))
    v = after[h:]
    if j >= 2:
        return ((("sigma", -1),)
                + transposition_word(k - 1, w[1:])
                + (("sigma", 1),))
    if k >= 3:
        return ((("delta", -1),)
                + transposition_word(k - 1, w)
                + (("delta", 1),))
    if h >= 2:
        return ((("gamma1", -1),)
                + transposition_word(2, "a" + "b" * (h - 1) + v)
                + (("gamma1", 1),))
    if v == "":
        return (("tp_ab", 1),)
    if v == "a":
        return (("tp_aba", 1),)
    return ((("gamma2", -1),)
            + transposition_word(2, "ab" + v[1:])
            + (("gamma2", 1),))


def permutation_to_transpositions(pi: Table, base: str) -> list[Transposition]:
    """Decompose a code permutation into transpositions anchored at ``base``.

    ``pi`` must have equal domain and image code; ``base`` must be the power
    of a contained in that code.  Cycles are processed by dictionary-least
    element; a cycle (x1|x2|...|xr) becomes (x1|xr)(x1|x(r-1))...(x1|x2) and
    an off-base transposition (x|y) becomes (base|x)(base|y)(base|x).  At
    most 3 times the code size transpositions are emitted, and their product
    (rightmost applied first) is congruent to pi.
    """
    if set(pi.domain) != set(pi.image):
        raise ValueError("table is not a permutation of its domain code")
    if base.strip("a"):
        raise ValueError(f"base must be a power of a, got {base!r}")
    if base not in pi.domain:
        raise ValueError(f"base {base!r} is not in the code")
    k = len(base)
    mapping = dict(zip(pi.domain, pi.image))
    seen: set[str] = set()
    out: list[Transposition] = []
    for start in pi.domain:
        if start in seen or mapping[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        anchor = cycle[0]
        for x in reversed(cycle[1:]):
            if anchor == base:
                out.append(Transposition(k, x))
            else:
                out.append(Transposition(k, anchor))
                out.append(Transposition(k, x))
                out.append(Transposition(k, anchor))
    return out


def element_to_word(g: Table) -> GenWord:
    """Compile an arbitrary element to a word over the nine generators.

    Concatenates the sigma/theta word for beta, the transposition words for
    pi, and the sigma/theta word for alpha; the evaluation of the result
    equals g, with length O(n log n) in the table size n.
    """
    g = max_extend(g)
    if g.is_identity:
        return ()
    fact = canonical_factor(g)
    base = fact.pi.domain[0]
    syms: list[tuple[str, int]] = list(f_word(fact.beta))
    for t in permutation_to_transpositions(fact.pi, base):
        syms.extend(transposition_word(t.k, t.w))
    syms.extend(f_word(fact.alpha))
    return free_reduce(syms)


def word_length_ratio(g: Table, word_length: int) -> float:
    """word_length / (n * (1 + ceil(log2 n))) for table size n of g."""
    n = max_extend(g).size
    return word_length / (n * (1 + math.ceil(math.log2(n)))) if n > 1 else float(word_length)
