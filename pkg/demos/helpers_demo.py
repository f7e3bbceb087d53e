"""Tiny random-element helper shared by the demo scripts."""

import random

from thompsonv import Table, max_extend


def random_code(rng: random.Random, n: int):
    if n == 1:
        return ("",)
    left = rng.randint(1, n - 1)
    return (tuple("a" + w for w in random_code(rng, left))
            + tuple("b" + w for w in random_code(rng, n - left)))


def random_element(rng: random.Random, max_size: int) -> Table:
    n = rng.randint(1, max_size)
    dom = random_code(rng, n)
    img = list(random_code(rng, n))
    rng.shuffle(img)
    return max_extend(Table(dom, tuple(img)))
