"""Shared random generators for the test suite (seeded by each test)."""

from __future__ import annotations

import random

from thompsonv.normalform import order_iso
from thompsonv.tables import Table, max_extend

ALL_SYMBOLS = tuple(
    (name, sign)
    for name in ("sigma", "theta", "gamma1", "gamma2", "delta",
                 "tp_ab", "tp_aba", "tp_abb", "tp_swap")
    for sign in (1, -1))


def random_code(rng: random.Random, n: int) -> tuple[str, ...]:
    """A maximal prefix code of cardinality n (random binary tree shape)."""
    if n == 1:
        return ("",)
    left = rng.randint(1, n - 1)
    return (tuple("a" + w for w in random_code(rng, left))
            + tuple("b" + w for w in random_code(rng, n - left)))


def random_table(rng: random.Random, size: int, extended: bool = True) -> Table:
    """A random table with codes of the given size, maximally extended by default."""
    dom = random_code(rng, size)
    img = list(random_code(rng, size))
    rng.shuffle(img)
    t = Table(dom, tuple(img))
    return max_extend(t) if extended else t


def random_f_table(rng: random.Random, size: int) -> Table:
    """A random order-preserving element, as the order iso of two random codes."""
    return max_extend(order_iso(random_code(rng, size), random_code(rng, size)))


def random_genword(rng: random.Random, length: int):
    return tuple(rng.choice(ALL_SYMBOLS) for _ in range(length))


def random_free_word(rng: random.Random, blocks: int, max_exp: int):
    letters = ["alpha", "beta"]
    start = rng.randrange(2)
    out = []
    for i in range(blocks):
        exp = rng.randint(1, max_exp) * rng.choice((1, -1))
        out.append((letters[(start + i) % 2], exp))
    return tuple(out)
