"""Constacyclic codes and transport from cyclic codes at odd length.

For a unit wrap constant lam, a lam-constacyclic code is closed under
the shift that multiplies the wrapped entry by lam.  Componentwise each
Gray block is cyclic or negacyclic depending on the corresponding Gray
coordinate of lam, and for odd length the substitution x -> delta*x
(delta^n = lam) transports cyclic codes to constacyclic ones without
changing the Gray weight distribution.
"""

from ternring import (
    RCode,
    UNITS,
    classify_constacyclic,
    constacyclic_shift,
    constacyclic_transport,
    parse_element,
    parse_poly,
)

P = parse_poly

print("== classifying the component shifts per wrap constant ==")
for lam in UNITS:
    kinds = classify_constacyclic(lam)
    print(f"  lam = {str(lam):8s} gray {lam.gray} -> components {kinds}")

print("\n== transporting a cyclic code to a negacyclic one ==")
source = RCode.cyclic(3, (P("x+2"), P("x+2"), P("x+2")))
lam = parse_element("2")
target = constacyclic_transport(source, lam)
print("source generators:", ", ".join(str(c.g) for c in source.components))
print("target generators:", ", ".join(str(c.g) for c in target.components))
print(f"distances: source {source.lee_distance()}, target {target.lee_distance()}")

print("\n== the target really is closed under the twisted wrap ==")
word = next(w for w in target.codewords() if any(w))
shifted = constacyclic_shift(word, lam)
print(f"codeword {word} -> shifted {shifted}: member? {target.membership(shifted)}")

print("\n== a mixed wrap constant ==")
lam = parse_element("1+v^2")
print(f"lam = {lam}, gray {lam.gray} -> {classify_constacyclic(lam)}")
print("(first component cyclic, other two negacyclic)")
