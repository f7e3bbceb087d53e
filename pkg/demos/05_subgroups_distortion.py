"""Subgroups of V: integers, finite groups, and an undistorted free group.

The integers embed into the code a*ab U b*ba; the shift and the finitary
permutations then generate a subgroup containing every finite group.  Two
explicit six-entry tables generate a free group of rank two whose distortion
is linear: for any reduced word, the image of one short input already has
length exceeding the free length, which forces the table size of the product
to exceed it too.  Doubling into the two subtrees turns this into a copy of
the direct product of two free groups, still undistorted.
"""

import random

from thompsonv import (
    double_a,
    double_b,
    finitary_perm_table,
    format_table,
    free_generators,
    int_embed,
    invert,
    multiply,
    product_size_check,
    shift_table,
    verify_distortion,
)
from thompsonv.subgroups import closed_form_witness, format_free_word, parse_free_word

print("== the integers inside V ==")
for z in (-2, -1, 0, 1, 2):
    print(f"  {z:3} -> {int_embed(z)}")
shift = shift_table()
print("shift table:", shift)
print("shift moves embedded 0 to embedded 1:", shift.apply(int_embed(0)) == int_embed(1))

tau = finitary_perm_table({0: 1, 1: 0})
print("transposition (0 1):", tau)
print("conjugating by the shift gives (1 2):",
      multiply(shift, multiply(tau, invert(shift))) == finitary_perm_table({1: 2, 2: 1}))

print()
print("== a free group of rank two ==")
alpha, beta = free_generators()
print("alpha =", format_table(alpha))
print("beta  =", format_table(beta))

mu = parse_free_word("a^2 b^-1 a^1")
print()
print("take the reduced word mu =", format_free_word(mu))
wit = closed_form_witness(mu)
print("closed-form witness images on inputs", wit.inputs, ":")
print("  ", wit.images[0])
print("  ", wit.images[1])
print("shared prefix y of length", len(wit.y), "> free length 4")

report = verify_distortion(mu)
print("verification report:")
print("  closed form equals direct evaluation:", report.closed_form_matches)
print("  |y| > free length:", report.witness_exceeds_free_length)
print("  table size of the product:", report.table_size, ">", report.free_length,
      ":", report.table_size_exceeds_free_length)

print()
rng = random.Random(9)
ok = 0
for _ in range(40):
    blocks = []
    letter = rng.choice(("alpha", "beta"))
    for _ in range(rng.randint(1, 6)):
        blocks.append((letter, rng.choice((1, -1)) * rng.randint(1, 3)))
        letter = "beta" if letter == "alpha" else "alpha"
    if verify_distortion(tuple(blocks)).all_ok:
        ok += 1
print(f"random sweep: {ok}/40 reduced words pass all three checks")

print()
print("== doubling into the subtrees ==")
sigma = shift  # any element works; the shift is handy
phi_a = double_a(sigma)
psi_b = double_b(sigma)
print("copy under a:", phi_a)
print("copy under b:", psi_b)
print("the copies commute:", multiply(phi_a, psi_b) == multiply(psi_b, phi_a))
print("product size adds exactly:", product_size_check(sigma, sigma),
      f"({multiply(phi_a, psi_b).size} = {sigma.size} + {sigma.size})")
