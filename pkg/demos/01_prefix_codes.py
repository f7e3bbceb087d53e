"""Words over {a, b}, prefix codes, and maximal prefix codes.

Walks through the basic vocabulary: the dictionary order, antichains of
words, the tree cut property, quotients, and the Catalan count of maximal
prefix codes.
"""

from thompsonv import (
    dict_compare,
    enumerate_maximal_codes,
    format_code,
    ideal_intersection_code,
    is_maximal_prefix_code,
    is_prefix_code,
    quotient,
)

print("== dictionary order ==")
print("a word precedes its extensions:  a < ab:", dict_compare("a", "ab") == -1)
print("otherwise first letter decides:  ab < ba:", dict_compare("ab", "ba") == -1)

print()
print("== prefix codes ==")
code = ("aa", "ab", "b")
print(f"{format_code(code)} is a prefix code:", is_prefix_code(code))
print(f"{format_code(code)} cuts the whole tree:", is_maximal_prefix_code(code))
print("{aa, b} leaves the word ab uncovered:", is_maximal_prefix_code(("aa", "b")))

print()
print("== quotients ==")
print("everything of the code below the vertex a:", format_code(quotient("a", code)))
print("below b the code looks like {e}:", format_code(quotient("b", code)))

print()
print("== intersecting right ideals ==")
other = ("a", "ba", "bb")
meet = ideal_intersection_code(code, other)
print(f"{format_code(code)} * A^*  meet  {format_code(other)} * A^*")
print("is generated by:", format_code(meet))

print()
print("== counting maximal prefix codes ==")
for n in range(1, 9):
    print(f"  cardinality {n}: {len(enumerate_maximal_codes(n))} codes")
print("(the Catalan numbers, via binary trees with n leaves)")
print()
print("all five codes of cardinality 4:")
for c in enumerate_maximal_codes(4):
    print("  ", format_code(c))
