"""Linear codes over the 27-element ring as component triples.

A cyclic or negacyclic code over the ring splits along the idempotents
into three ternary codes (f1, f2, f3); cardinality, Gray image, Lee
distance, and duality all reduce to the components.  A single ring
generator can be recovered from, or decomposed into, the triple.
"""

from ternring import (
    ModulusSign,
    RCode,
    decompose_generator,
    format_ring_poly,
    parse_element,
    parse_poly,
)

MINUS = ModulusSign.MINUS
P = parse_poly

print("== a length-3 negacyclic code from a ring generator ==")
coeffs = [parse_element(t) for t in ("1", "1+2v+2v^2", "2v+2v^2")]
print("ring generator:", format_ring_poly(coeffs))
code = decompose_generator(coeffs, 3, MINUS)
print("component generators:", ", ".join(str(c.g) for c in code.components))
print(f"component dimensions {code.dims}, so |C| = 3^{code.cardinality_log3}")
print(f"Lee distance = {code.lee_distance()}")

print("\n== a length-10 negacyclic code and its dual ==")
coeffs10 = [parse_element(t) for t in ("1", "2v", "1+2v^2", "v", "v^2")]
code10 = decompose_generator(coeffs10, 10, MINUS)
print(f"|C| = 3^{code10.cardinality_log3}")
dual = code10.dual()
print("dual generator:", format_ring_poly(dual.combined_generator()))

print("\n== the Gray image is the concatenation of the components ==")
triple = (P("x+1"), P("x^2+2x+1"), P("x+1"))
c = RCode.negacyclic(3, triple)
img = c.gray_image()
print(f"Gray image: {img.shape[0]} x {img.shape[1]} ternary generator matrix")
print(f"rows split into blocks of length 3 per component; rank = {img.shape[0]}")

print("\n== self-orthogonality is componentwise ==")
print(f"is the length-3 code self-orthogonal? {code.is_self_orthogonal()}")
print(f"does the length-10 code contain its dual? {code10.contains_dual()}")
