"""Arithmetic in the 27-element commutative ring GF(3)[v]/(v^3 - v).

Elements are written ``a + b*v + c*v^2`` with coefficients a, b, c in
{0, 1, 2}.  Since v^3 - v = v(v - 1)(v - 2) splits into distinct linear
factors over GF(3), evaluating at v = 0, 1, 2 is a ring isomorphism
onto GF(3) x GF(3) x GF(3).  We call the image

    gray(a + b*v + c*v^2) = (a, a + b + c, a + 2b + c)

the Gray coordinates of the element.  Almost every structural question
reduces to coordinate arithmetic:

* an element is a unit iff no Gray coordinate is zero -- there are 8
  units and each one squares to 1;
* the Lee weight of an element is the Hamming weight of its coordinate
  triple;
* the coordinate projectors pull back to the orthogonal idempotents
  E1 = 1 + 2v^2, E2 = 2v + 2v^2, E3 = v + 2v^2;
* the coefficient substitution b -> 2b is an order-2 ring automorphism
  (``theta``) that swaps the last two Gray coordinates.

There are exactly 27 ``RingElement`` instances; they are interned, so
equality is identity and all arithmetic is table lookup.
"""

from __future__ import annotations

import itertools
import re

from .errors import NotAUnit

__all__ = [
    "RingElement",
    "element",
    "scalar",
    "from_gray",
    "parse_element",
    "ZERO",
    "ONE",
    "TWO",
    "V",
    "V2",
    "E1",
    "E2",
    "E3",
    "IDEMPOTENTS",
    "UNITS",
    "ELEMENTS",
    "THETA_FIXED_UNITS",
    "ideals",
    "format_ring_poly",
    "parse_ring_poly",
]


def _index_coords(idx: int) -> tuple[int, int, int]:
    a, b, c = idx % 3, (idx // 3) % 3, idx // 9
    return (a, (a + b + c) % 3, (a + 2 * b + c) % 3)


_GRAY = tuple(_index_coords(i) for i in range(27))
_FROM_GRAY = {g: i for i, g in enumerate(_GRAY)}

_ADD = [
    [
        ((x + y) % 3) + 3 * ((x // 3 + y // 3) % 3) + 9 * ((x // 9 + y // 9) % 3)
        for y in range(27)
    ]
    for x in range(27)
]


def _mul_index(x: int, y: int) -> int:
    gx, gy = _GRAY[x], _GRAY[y]
    return _FROM_GRAY[(gx[0] * gy[0] % 3, gx[1] * gy[1] % 3, gx[2] * gy[2] % 3)]


_MUL = [[_mul_index(x, y) for y in range(27)] for x in range(27)]
_NEG = [(-x % 3) + 3 * (-(x // 3) % 3) + 9 * (-(x // 9) % 3) for x in range(27)]
_THETA = [(x % 3) + 3 * ((2 * (x // 3)) % 3) + 9 * (x // 9) for x in range(27)]
_LEE = [sum(1 for g in _GRAY[x] if g) for x in range(27)]
_IS_UNIT = [all(_GRAY[x]) for x in range(27)]


class RingElement:
    """An interned element a + b*v + c*v^2 of GF(3)[v]/(v^3 - v)."""

    __slots__ = ("index",)

    def __new__(cls, a: int = 0, b: int = 0, c: int = 0) -> "RingElement":
        return ELEMENTS[(a % 3) + 3 * (b % 3) + 9 * (c % 3)]

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    # -- structure ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, int, int]:
        """Coefficient triple (a, b, c)."""
        i = self.index
        return (i % 3, (i // 3) % 3, i // 9)

    @property
    def gray(self) -> tuple[int, int, int]:
        """Gray coordinates (value at v = 0, 1, 2)."""
        return _GRAY[self.index]

    def theta(self) -> "RingElement":
        """Order-2 ring automorphism b -> 2b (swaps Gray coords 2 and 3)."""
        return ELEMENTS[_THETA[self.index]]

    def lee_weight(self) -> int:
        """Number of nonzero Gray coordinates (0..3)."""
        return _LEE[self.index]

    def is_unit(self) -> bool:
        return _IS_UNIT[self.index]

    def inverse(self) -> "RingElement":
        """Multiplicative inverse; every unit here is its own inverse."""
        if not _IS_UNIT[self.index]:
            raise NotAUnit(f"{self} has a zero Gray coordinate")
        return self

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RingElement | None":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return ELEMENTS[other % 3]
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ELEMENTS[_ADD[self.index][o.index]]

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ELEMENTS[_ADD[self.index][_NEG[o.index]]]

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ELEMENTS[_ADD[o.index][_NEG[self.index]]]

    def __neg__(self):
        return ELEMENTS[_NEG[self.index]]

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ELEMENTS[_MUL[self.index][o.index]]

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return self.index != 0

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.index == o.index

    def __hash__(self):
        return self.index

    # -- text --------------------------------------------------------

    def __str__(self) -> str:
        a, b, c = self.coeffs
        terms = []
        if a:
            terms.append(str(a))
        if b:
            terms.append("v" if b == 1 else "2v")
        if c:
            terms.append("v^2" if c == 1 else "2v^2")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"<{self}>"


def _make(idx: int) -> RingElement:
    e = object.__new__(RingElement)
    object.__setattr__(e, "index", idx)
    return e


ELEMENTS: tuple[RingElement, ...] = tuple(_make(i) for i in range(27))


def element(a: int = 0, b: int = 0, c: int = 0) -> RingElement:
    """The element a + b*v + c*v^2 (coefficients reduced mod 3)."""
    return ELEMENTS[(a % 3) + 3 * (b % 3) + 9 * (c % 3)]


def scalar(t: int) -> RingElement:
    """Embed an integer as the constant t mod 3."""
    return ELEMENTS[t % 3]


def from_gray(coords) -> RingElement:
    """Inverse of the Gray coordinate map."""
    g1, g2, g3 = (t % 3 for t in coords)
    return ELEMENTS[_FROM_GRAY[(g1, g2, g3)]]


ZERO = ELEMENTS[0]
ONE = ELEMENTS[1]
TWO = ELEMENTS[2]
V = element(0, 1, 0)
V2 = element(0, 0, 1)
E1 = from_gray((1, 0, 0))  # 1 + 2v^2
E2 = from_gray((0, 1, 0))  # 2v + 2v^2
E3 = from_gray((0, 0, 1))  # v + 2v^2
IDEMPOTENTS = (E1, E2, E3)
UNITS = tuple(e for e in ELEMENTS if e.is_unit())
THETA_FIXED_UNITS = tuple(u for u in UNITS if u.theta() is u)


def ideals() -> tuple[frozenset[RingElement], ...]:
    """All ideals of the ring, found by brute force.

    Additive subgroups are GF(3)-subspaces of the coefficient space;
    we keep those closed under multiplication by every ring element.
    The result has exactly 8 members.
    """
    spans = {frozenset(ELEMENTS)}
    nonzero = ELEMENTS[1:]
    for gens in itertools.chain(
        [()],
        itertools.combinations(nonzero, 1),
        itertools.combinations(nonzero, 2),
    ):
        # A finite additive subgroup of the ring is a GF(3)-subspace,
        # so proper subgroups are spanned by at most two elements.
        span = {
            sum(t * g for t, g in zip(ts, gens)) + ZERO
            for ts in itertools.product(range(3), repeat=len(gens))
        }
        spans.add(frozenset(span))
    out = [
        s
        for s in spans
        if all((r * x) in s for r in ELEMENTS for x in s)
    ]
    out.sort(key=lambda s: (len(s), sorted(e.index for e in s)))
    return tuple(out)


_ELEMENT_TERM = re.compile(r"^(?:([012])|([2])?v|([2])?v\^2)$")


def parse_element(text: str) -> RingElement:
    """Parse strings like ``1+2v+2v^2``, ``v``, ``2v^2`` or ``0``."""
    s = text.replace("²", "^2").replace(" ", "")
    if not s:
        raise ValueError("empty ring element")
    a = b = c = 0
    for term in s.split("+"):
        m = _ELEMENT_TERM.match(term)
        if not m:
            raise ValueError(f"bad ring element term: {term!r}")
        if m.group(1) is not None:
            a += int(m.group(1))
        elif term.endswith("^2"):
            c += int(m.group(3) or 1)
        else:
            b += int(m.group(2) or 1)
    return element(a, b, c)


# -- polynomials with ring coefficients: shared text helpers ---------
#
# Both the commutative polynomial ring R[x] (rcodes) and the twisted
# one R[x, theta] (skew) print and parse the same way, so the routines
# live here.  Coefficient sequences are ascending, like everywhere
# else in the package.


def format_ring_poly(coeffs) -> str:
    """Render ascending ring coefficients like ``(2v+2v^2)x^2+x+1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        r = coeffs[i]
        if not r:
            continue
        if i == 0:
            terms.append(str(r))
            continue
        xpart = "x" if i == 1 else f"x^{i}"
        s = str(r)
        if s == "1":
            terms.append(xpart)
        elif "+" in s:
            terms.append(f"({s}){xpart}")
        else:
            terms.append(s + xpart)
    return "+".join(terms) if terms else "0"


_RPOLY_TERM = re.compile(
    r"^(?:\(([^()]+)\)|((?:[2]?v(?:\^2)?)|[012]))?(x(?:\^(\d+))?)?$"
)


def parse_ring_poly(text: str) -> tuple[RingElement, ...]:
    """Parse ``(2v+2v^2)x^2+(1+2v+2v^2)x+1`` into ascending coefficients.

    Returns a tuple with trailing zeros stripped; the zero polynomial
    parses to the empty tuple.
    """
    s = text.replace("²", "^2").replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if "-" in s:
        raise ValueError("write additive inverses with coefficient 2, not '-'")
    # split on '+' outside parentheses
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    coeffs: dict[int, RingElement] = {}
    for part in parts:
        if not part:
            raise ValueError(f"empty term in {text!r}")
        m = _RPOLY_TERM.match(part)
        if not m or (m.group(1) is None and m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad polynomial term: {part!r}")
        if m.group(1) is not None:
            coef = parse_element(m.group(1))
        elif m.group(2) is not None:
            coef = parse_element(m.group(2))
        else:
            coef = ONE
        if m.group(3) is None:
            power = 0
        else:
            power = 1 if m.group(4) is None else int(m.group(4))
        coeffs[power] = coeffs.get(power, ZERO) + coef
    deg = max((p for p, r in coeffs.items() if r), default=-1)
    return tuple(coeffs.get(i, ZERO) for i in range(deg + 1))
