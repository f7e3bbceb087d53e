"""The fixed nine-generator set of V, generator words, and word-problem decisions.

Generator words are tuples of (name, sign) pairs with sign +1 or -1.  In a
word the leftmost symbol acts last: ``g1 g2 g3`` evaluates to the product
table(g1) * table(g2) * table(g3) with g3 applied first, matching ordinary
function composition.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Mapping, Sequence

from .tables import IDENTITY, Table, max_extend, multiply
from .words import ParseError

_TABLE_DATA = {
    "sigma": (("aa", "ab", "b"), ("a", "ba", "bb")),
    "theta": (("a", "baa", "bab", "bb"), ("a", "ba", "bba", "bbb")),
    "gamma1": (("aa", "aba", "abb", "b"), ("aa", "ba", "ab", "bb")),
    "gamma2": (("aa", "aba", "abb", "b"), ("aa", "ab", "ba", "bb")),
    "delta": (("aaa", "aab", "ab", "b"), ("aa", "ba", "ab", "bb")),
    "tp_ab": (("aa", "ab", "b"), ("ab", "aa", "b")),
    "tp_aba": (("aa", "aba", "abb", "b"), ("aba", "aa", "abb", "b")),
    "tp_abb": (("aa", "ab", "b"), ("aa", "b", "ab")),
    "tp_swap": (("a", "b"), ("b", "a")),
}

GENERATOR_NAMES = tuple(_TABLE_DATA)

_TABLES = {name: Table(dom, img) for name, (dom, img) in _TABLE_DATA.items()}
_INVERSES = {name: t.inverse() for name, t in _TABLES.items()}

for _name, _t in _TABLES.items():
    # every generator table must already be maximally extended
    assert max_extend(_t) == _t, _name

C_DELTA = max(t.size for t in _TABLES.values())

GenWord = tuple[tuple[str, int], ...]


def generator_table(name: str) -> Table:
    try:
        return _TABLES[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; "
                         f"expected one of {', '.join(GENERATOR_NAMES)}") from None


def symbol_table(name: str, sign: int) -> Table:
    if sign == 1:
        return generator_table(name)
    if sign == -1:
        generator_table(name)
        return _INVERSES[name]
    raise ValueError(f"sign must be +1 or -1, got {sign}")


def invert_genword(word: Iterable[tuple[str, int]]) -> GenWord:
    return tuple((name, -sign) for name, sign in reversed(tuple(word)))


def free_reduce(word: Iterable[tuple[str, int]]) -> GenWord:
    """Cancel adjacent mutually inverse symbols until none remain."""
    out: list[tuple[str, int]] = []
    for name, sign in word:
        if out and out[-1][0] == name and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((name, sign))
    return tuple(out)


def evaluate_sequential(word: Iterable[tuple[str, int]]) -> Table:
    """Right-to-left fold of the group product over the generator tables."""
    acc = IDENTITY
    for name, sign in reversed(tuple(word)):
        acc = multiply(symbol_table(name, sign), acc)
    return acc


def evaluate_balanced(word: Iterable[tuple[str, int]], max_workers: int = 1) -> Table:
    """Evaluate by a pairwise composition tree of logarithmic depth.

    Extends maximally at every internal node; the result equals the
    sequential evaluation.  With ``max_workers`` > 1 the top of the tree is
    split across a thread pool (sibling subtrees are independent, all inputs
    immutable).
    """
    leaves = [symbol_table(name, sign) for name, sign in word]
    if not leaves:
        return IDENTITY
    if max_workers > 1 and len(leaves) >= 2 * max_workers:
        step = (len(leaves) + max_workers - 1) // max_workers
        chunks = [leaves[i:i + step] for i in range(0, len(leaves), step)]
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            partials = list(pool.map(_fold_pairwise, chunks))
        return _fold_pairwise(partials)
    return _fold_pairwise(leaves)


def _fold_pairwise(tables: list[Table]) -> Table:
    while len(tables) > 1:
        nxt = [multiply(tables[i], tables[i + 1])
               for i in range(0, len(tables) - 1, 2)]
        if len(tables) % 2:
            nxt.append(tables[-1])
        tables = nxt
    return tables[0]


def is_identity_word(word: Iterable[tuple[str, int]]) -> bool:
    """Decide the word problem: does the word represent the identity of V?"""
    return evaluate_balanced(tuple(word)) == IDENTITY


def find_witness(word: Iterable[tuple[str, int]]) -> str | None:
    """Dictionary-least domain word moved by the evaluated element, or None.

    Returns None exactly when the word represents the identity.  A witness z
    satisfies len(z) <= C_DELTA * len(word).
    """
    t = evaluate_balanced(tuple(word))
    for d, im in zip(t.domain, t.image):
        if d != im:
            return d
    return None


def apply_word(word: Iterable[tuple[str, int]], x: str) -> str | None:
    """Apply the generators right-to-left to a concrete word.

    Never builds the product table.  Returns None as soon as a stage is
    undefined on the current word; wherever both are defined, the result
    agrees with applying the evaluated table.
    """
    for name, sign in reversed(tuple(word)):
        nxt = symbol_table(name, sign).apply(x)
        if nxt is None:
            return None
        x = nxt
    return x


def superadditive_envelope(t: Mapping[int, int] | Sequence[int] | Callable[[int], int],
                           n: int) -> int:
    """Largest sum of t over a partition of n.

    ``t`` must be non-decreasing with t(k) >= k on 1..n; it may be a mapping,
    a sequence indexed so that t[k] is the value at k, or a callable.  The
    value T(n) computed by the partition dynamic program is superadditive and
    satisfies t(n) <= T(n) <= n * t(n).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if callable(t):
        lookup = t
    else:
        lookup = t.__getitem__
    vals = [0] * (n + 1)
    for k in range(1, n + 1):
        vals[k] = lookup(k)
        if vals[k] < k:
            raise ValueError(f"t({k}) = {vals[k]} is below the identity")
        if vals[k] < vals[k - 1]:
            raise ValueError(f"t is not non-decreasing at {k}")
    best = [0] * (n + 1)
    for m in range(1, n + 1):
        best[m] = max(vals[m],
                      max((best[i] + best[m - i] for i in range(1, m)), default=0))
    return best[n]


# -- text syntax ---------------------------------------------------------------
#
# genword  :=  (token whitespace)*        token  :=  name ('^-1')?


def parse_genword(text: str) -> GenWord:
    out: list[tuple[str, int]] = []
    pos = 0
    for token in text.split():
        pos = text.find(token, pos)
        name, sign = token, 1
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        if name not in _TABLES:
            raise ParseError(f"unknown generator token {token!r}", text, pos)
        out.append((name, sign))
    return tuple(out)


def format_genword(word: Iterable[tuple[str, int]]) -> str:
    return " ".join(name if sign == 1 else f"{name}^-1" for name, sign in word)
