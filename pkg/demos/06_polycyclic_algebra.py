"""The polycyclic monoid algebra and the representation of V inside it.

Monomials y x^-1 multiply by prefix cancellation; a table corresponds to the
sum of its entries, composition becomes multiplication, and the rewrite rule
a a^-1 + b b^-1 -> 1 implements maximum extension.  The demo follows one
multiplication all the way to normal form on both sides of the
correspondence.
"""

from fractions import Fraction

from thompsonv import (
    AlgebraElement,
    Monomial,
    compose,
    format_sum,
    is_congruent,
    max_extend,
    mono_mul,
    parse_sum,
    parse_table,
    phi_of,
    reduce_mod_iv,
    sigma_of,
    star,
)

print("== monomials ==")
pairs = [(Monomial("a", "aa"), Monomial("a", "a")),
         (Monomial("ba", "ab"), Monomial("aa", "a")),
         (Monomial("b", "ab"), Monomial("a", "b"))]
for m1, m2 in pairs:
    product = mono_mul(m1, m2)
    shown = "0" if product is None else format_sum(AlgebraElement([(product, 1)]))
    print(f"  ({format_sum(AlgebraElement([(m1, 1)]))}) * "
          f"({format_sum(AlgebraElement([(m2, 1)]))}) = {shown}")
print("(middle case: the inner words are prefix-incomparable, so the product dies)")

print()
print("== tables as unary sums ==")
b = parse_table("[a->a, ba->ba^2, b^2a->bab, b^3->b^2]")
c = parse_table("[a^2->a, ab->ba, ba^2->b^2a, bab->b^3a, b^2->b^4]")
sb, sc = sigma_of(b), sigma_of(c)
print("b  ~ ", format_sum(sb))
print("c  ~ ", format_sum(sc))

product = sc * sb
print()
print("the product of the sums (prefix cancellation, zero terms dropped):")
print("  ", format_sum(product))
print("matches the composite table:", phi_of(product) == compose(c, b))

reduced = reduce_mod_iv(product)
print()
print("rewriting sibling pairs  y a (x a)^-1 + y b (x b)^-1  ->  y x^-1 :")
print("  ", format_sum(reduced))
print("matches the maximum extension:", phi_of(reduced) == max_extend(compose(c, b)))
print("congruent to the unreduced product:", is_congruent(product, reduced))

print()
print("== the involution ==")
print("star swaps the two words of every monomial:")
print("  star(b) =", format_sum(star(sb)))
print("  equals the sum of the inverse table:", star(sb) == sigma_of(b.inverse()))

print()
print("== general elements with rational coefficients ==")
s = parse_sum("3/2 1 + -2 ab b^-1")
t = AlgebraElement([(Monomial("a", ""), Fraction(1, 3))])
print(f"  s = {format_sum(s)}")
print(f"  t = {format_sum(t)}")
print(f"  s * t = {format_sum(s * t)}")
print(f"  s + t = {format_sum(s + t)}")
