"""The skew polynomial ring and twisted codes.

Multiplication twists coefficients through the swap automorphism:
x * c = theta(c) * x.  Right division still works whenever the divisor
has a unit leading coefficient, which gives right divisors, principal
skew cyclic codes, a census, a Hermitian pairing, and one-generator
quasi-twisted modules -- including an honest counterexample where the
expected freeness fails.
"""

from ternring import (
    SkewPoly,
    V,
    count_skew_cyclic,
    gcld,
    hermitian_inner_product,
    ideals,
    monic_right_divisors,
    one_generator_sqc,
    parse_skew_poly,
    skew_cyclic_code,
    skew_right_divmod,
    vector_to_polys,
)

P = parse_skew_poly
X = SkewPoly.x_power(1)

print("== the twist ==")
print(f"x * v   = {X * SkewPoly([V])}   (theta moves v to 2v)")
print(f"v * x   = {SkewPoly([V]) * X}")

print("\n== right division reconstructs ==")
f, g = P("x^3+vx+1"), P("x+2")
q, r = skew_right_divmod(f, g)
print(f"({f}) = ({q})({g}) + ({r})")
assert f == q * g + r

print("\n== right divisors and principal codes ==")
divs = monic_right_divisors(2, 1)
print("monic right divisors of x^2-1:", ", ".join(str(d) for d in divs))
code = skew_cyclic_code(P("x^3+x^2+x+1"), 12)
print(f"code from x^3+x^2+x+1 at n=12: rank {code.rank}, "
      f"Gray dimension {code.gray_dimension}")

print("\n== census of skew cyclic codes ==")
print(f"n=1: {count_skew_cyclic(1)} (the {len(ideals())} ideals of the ring)")
print(f"n=3: {count_skew_cyclic(3)} distinct component-triple codes")
print("note: only the 16 triples whose last two components agree are")
print("closed under the twisted shift itself, since the automorphism")
print("swaps those two Gray blocks")

print("\n== Hermitian pairing detects shifted orthogonality ==")
e, c = (1, 0), (0, 1)
h = hermitian_inner_product(vector_to_polys(e, 2, 1), vector_to_polys(c, 2, 1), 2, 1)
print(f"e = {e}, c = {c}: pairing = {h} (nonzero, and indeed the shift of e hits c)")

print("\n== common left divisors and one-generator modules ==")
g = gcld([P("x+1"), P("x^2+2")], 2, 1)
print(f"gcld(x+1, x^2+2, x^2-1) = {g}")
m = one_generator_sqc((P("x+1"), P("x+1")), 2, 2, 1)
print(f"module from (x+1, x+1) at s=2, l=2: Gray dimension {m.gray_dimension}, "
      f"free of expected rank? {m.is_free_of_expected_rank}")

print("\n== freeness can genuinely fail ==")
bad = one_generator_sqc((P("x+1"), P("x^2+(v+v^2)x+2+v+v^2")), 4, 2, 1)
print(f"generators ({bad.generators[0]}, {bad.generators[1]}), wrap constant 1:")
print(f"  common divisor {bad.common_divisor} -> a free module would have "
      f"Gray dimension {3 * bad.expected_rank}")
print(f"  actual Gray dimension {bad.gray_dimension} "
      f"(3^{bad.gray_dimension} codewords, not a free module)")
