"""Tour of the 27-element ring and its Gray map.

The ring is Z3[v] with v^3 = v.  Evaluating at v = 0, 1, 2 splits it
into three copies of GF(3); the Gray map lists those three values, so
ring arithmetic becomes componentwise arithmetic and the Lee weight of
an element is the Hamming weight of its Gray image.
"""

from ternring import (
    ELEMENTS,
    IDEMPOTENTS,
    ONE,
    THETA_FIXED_UNITS,
    UNITS,
    V,
    element,
    from_gray,
    ideals,
    parse_element,
    scalar,
)

print("== elements and Gray coordinates ==")
x = parse_element("1+2v+v^2")
print(f"x = {x}, gray(x) = {x.gray}, lee weight = {x.lee_weight()}")
print(f"v^3 = {V ** 3} (equals v, as it must)")
print(f"gray is a bijection: {len({e.gray for e in ELEMENTS})} distinct images")

print("\n== arithmetic is componentwise through the Gray map ==")
y = parse_element("2+v^2")
print(f"y = {y}, gray(y) = {y.gray}")
print(f"x*y = {x * y}, gray(x*y) = {(x * y).gray}")
print("componentwise product:", tuple(a * b % 3 for a, b in zip(x.gray, y.gray)))

print("\n== units square to one ==")
for u in UNITS:
    assert u * u is ONE
print(f"{len(UNITS)} units, each its own inverse:", ", ".join(str(u) for u in UNITS))

print("\n== the swap automorphism theta ==")
print(f"theta(v) = {V.theta()}  (negates v, fixing 1 and v^2)")
print(f"gray(x) = {x.gray} -> gray(theta(x)) = {x.theta().gray}")
print("theta swaps the last two Gray coordinates; it fixes", len(THETA_FIXED_UNITS), "units")

print("\n== idempotents split the ring ==")
e1, e2, e3 = IDEMPOTENTS
print(f"e1 = {e1}, e2 = {e2}, e3 = {e3}, e1+e2+e3 = {e1 + e2 + e3}")
decomposed = sum((scalar(t) * e for t, e in zip(x.gray, IDEMPOTENTS)), element())
print(f"x rebuilt from its Gray coordinates: {decomposed} (== {x})")

print("\n== ideals are Gray support masks ==")
for ideal in sorted(ideals(), key=len):
    support = sorted({i for e in ideal for i, t in enumerate(e.gray) if t})
    print(f"  size {len(ideal):2d}, Gray support {support}")
print(f"gray round trip: from_gray((2,0,1)) = {from_gray((2, 0, 1))}")
