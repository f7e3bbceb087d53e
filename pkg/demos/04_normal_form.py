"""Canonical factorization and compilation into generator words.

Every non-identity element factors uniquely as beta * pi * alpha with alpha
and beta order-preserving and pi a permutation of a balanced reference code.
Order-preserving elements compile to words over sigma and theta of length
below four times the table size; permutations decompose into transpositions
with logarithmic parameters, giving an O(n log n) generator word overall.
"""

import math
import random

from thompsonv import (
    balanced_code,
    canonical_factor,
    element_to_word,
    evaluate_sequential,
    f_word,
    format_code,
    format_genword,
    multiply,
    parse_table,
    permutation_to_transpositions,
    transposition_table,
    transposition_word,
)

from helpers_demo import random_element

print("balanced reference codes (all words of two adjacent lengths):")
for n in (3, 5, 6, 8):
    print(f"  n={n}:", format_code(balanced_code(n)))

g = parse_table("[a^2->b^2, ab->ba, ba->ab^2, b^2a->aba, b^2b->a^2]")
print()
print("g =", g)
fact = canonical_factor(g)
print("alpha =", fact.alpha, "  (order-preserving, into the reference code)")
print("pi    =", fact.pi, "  (permutation of the reference code)")
print("beta  =", fact.beta, "  (order-preserving, out of the reference code)")
assert multiply(fact.beta, multiply(fact.pi, fact.alpha)) == g
print("recomposition equals g: True")

print()
print("the permutation part decomposes into transpositions anchored at",
      fact.pi.domain[0] + ":")
for t in permutation_to_transpositions(fact.pi, fact.pi.domain[0]):
    print(f"  swap a^{t.k} with {t.w}:", transposition_table(t.k, t.w),
          "word:", format_genword(transposition_word(t.k, t.w)))

print()
print("order-preserving pieces compile to sigma/theta words:")
for part, name in ((fact.alpha, "alpha"), (fact.beta, "beta")):
    word = f_word(part)
    print(f"  {name}: {format_genword(word) or '(empty)'}  "
          f"(length {len(word)} < 4*{part.size})")

print()
word = element_to_word(g)
print("the full compiled word:")
print(" ", format_genword(word))
n = g.size
ratio = len(word) / (n * (1 + math.ceil(math.log2(n))))
print(f"  length {len(word)}, table size {n}, length/(n(1+log n)) = {ratio:.2f}")
assert evaluate_sequential(word) == g
print("  evaluates back to g: True")

print()
print("length statistics over random elements:")
rng = random.Random(1)
for size in (8, 16, 32, 64):
    worst = 0.0
    for _ in range(30):
        h = random_element(rng, size)
        w = element_to_word(h)
        m = h.size
        if m > 1:
            worst = max(worst, len(w) / (m * (1 + math.ceil(math.log2(m)))))
    print(f"  size <= {size:3}: max length/(n(1+log n)) = {worst:.2f}")
