"""Group elements as tables: composition, maximum extension, multiplication.

An element of Thompson's group V is a bijection between two maximal prefix
codes, acting on the right ideals they generate.  Composing two tables and
then extending maximally is the group operation; this demo multiplies two
concrete tables and watches the composite collapse to a three-entry table.
"""

from thompsonv import (
    compose,
    equal_in_v,
    invert,
    max_extend,
    multiply,
    parse_table,
    restrict,
)

b = parse_table("[a->a, ba->ba^2, b^2a->bab, b^3->b^2]")
c = parse_table("[a^2->a, ab->ba, ba^2->b^2a, bab->b^3a, b^2->b^4]")
print("b =", b)
print("c =", c)

raw = compose(c, b)
print()
print("functional composite c after b :", raw)
print("  size", raw.size, "<=", c.size, "+", b.size)

product = max_extend(raw)
print("maximum extension              :", product)
print("  three sibling collapses removed", raw.size - product.size, "entries")

print()
print("the group operation multiply() extends automatically:")
print("  multiply(c, b) =", multiply(c, b))

print()
print("inverses and the identity:")
print("  c^-1 =", invert(c))
print("  c * c^-1 =", multiply(c, invert(c)))

print()
print("congruence: a table equals any of its refinements in V")
refined = restrict(product, "b", ("a", "b"))
print("  refinement:", refined)
print("  equal in V:", equal_in_v(product, refined))

print()
print("applying an element to words (partial action):")
for w in ["aa", "aabba", "a"]:
    print(f"  {w!r} ->", product.apply(w))
print("(the last is undefined: a sits strictly above the domain code)")
