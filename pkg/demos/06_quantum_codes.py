"""Qutrit stabilizer codes from dual-containing ring codes.

A dual-containing code of length n over the ring has a 3n-symbol
ternary Gray image, and the CSS construction turns it into a qutrit
stabilizer code [[3n, 2K-3n, d]] where 3^K is the cardinality and d the
Lee distance.  The reference table rebuilds seven such codes from
scratch; an eighth construction is recorded as an expected flag because
its components do not contain their duals.
"""

from ternring import (
    ModulusSign,
    RCode,
    css_params,
    parse_poly,
    scan_dual_containing,
    verify_reference_table,
)
from ternring.errors import NotDualContaining

PLUS, MINUS = ModulusSign.PLUS, ModulusSign.MINUS
P = parse_poly

print("== a [[18,6,2]] code from a length-6 cyclic triple ==")
code = RCode.cyclic(6, (P("x^2+2"), P("x^2+2"), P("2x^2+1")))
print(f"components contain their duals? {code.contains_dual()}")
print(f"parameters: {css_params(code)}")

print("\n== the n=8 quadratic triple is rejected ==")
bad = RCode.cyclic(8, (P("x^2+1"), P("x^2+1"), P("x^2+1")))
try:
    css_params(bad)
except NotDualContaining as err:
    print(f"NotDualContaining: {err}")
print("(x^8-1 is squarefree, so g * reciprocal(g) cannot divide it)")
print(f"arithmetic without the check would read {css_params(bad, check=False)}")

print("\n== scanning every dual-containing triple at n=4 ==")
for f1, f2, f3, params in scan_dual_containing(4, MINUS):
    print(f"  ({f1}, {f2}, {f3}) -> {params}")

print("\n== rebuilding the full reference table ==")
for row in verify_reference_table():
    shown = row.params if row.params is not None else row.notes[0]
    print(f"  {row.status:4s} {row.label:22s} {shown}")
