"""Dense univariate polynomials over GF(3).

Coefficients are stored ascending (index = power of x) with trailing
zeros stripped, so the zero polynomial is the empty tuple and
``degree`` of zero is -1.  Text forms accepted everywhere: descending
sums like ``x^4+2x^3+x+1`` and bracketed ascending coefficient lists
like ``[1,1,0,2,1]``.

Factorization is deterministic: squarefree/cube splitting (this is
characteristic 3), distinct-degree splitting with Frobenius powers,
then equal-degree splitting that probes candidate polynomials in a
fixed canonical order.  Output is always the canonically sorted list
of monic irreducible factors with multiplicities, so two runs - or two
different correct algorithms - print the same thing.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BothZero,
    ConstantPolynomial,
    DivisionByZeroPoly,
    ZeroPolynomial,
)

__all__ = [
    "Z3Poly",
    "ModulusSign",
    "modulus",
    "gcd",
    "factor",
    "Factorization",
    "monic_irreducibles",
    "divisors_of_modulus",
]


class Z3Poly:
    """A polynomial over GF(3); immutable, compared by coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c % 3 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Z3Poly is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coef: int = 1) -> "Z3Poly":
        return cls([0] * degree + [coef])

    @classmethod
    def from_string(cls, text: str) -> "Z3Poly":
        return parse_poly(text)

    # -- structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Z3Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Z3Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self) -> tuple:
        """Canonical order: by degree, then lexicographic on the
        coefficient sequence read from the leading term down (the order
        the polynomial is printed in)."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other: "Z3Poly") -> bool:
        return self.sort_key() < other.sort_key()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Z3Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Z3Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Z3Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Z3Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Z3Poly":
        out, base = Z3Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Z3Poly") -> tuple["Z3Poly", "Z3Poly"]:
        """Quotient and remainder; the divisor may be non-monic."""
        o = _coerce(other)
        if o is None or not isinstance(o, Z3Poly):
            raise TypeError("divisor must be a polynomial")
        if not o:
            raise DivisionByZeroPoly("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Z3Poly(), self
        inv_lead = o.coeffs[-1]  # 1 and 2 are their own inverses mod 3
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            coef = (rem[k + o.degree] * inv_lead) % 3
            if coef:
                quot[k] = coef
                for j, y in enumerate(o.coeffs):
                    rem[k + j] = (rem[k + j] - coef * y) % 3
        return Z3Poly(quot), Z3Poly(rem[: o.degree])

    __divmod__ = divmod

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: "Z3Poly") -> bool:
        return not other % self

    def monic(self) -> "Z3Poly":
        if not self:
            raise ZeroPolynomial("zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        return self if lead == 1 else Z3Poly([lead * c for c in self.coeffs])

    def reciprocal(self) -> "Z3Poly":
        """x^deg * f(1/x): the coefficient tuple reversed."""
        if not self:
            raise ZeroPolynomial("zero polynomial has no reciprocal")
        return Z3Poly(reversed(self.coeffs))

    def derivative(self) -> "Z3Poly":
        return Z3Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % 3
        return acc

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                terms.append(xpart if c == 1 else f"{c}{xpart}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Z3Poly({self})"


def _coerce(other):
    if isinstance(other, Z3Poly):
        return other
    if isinstance(other, int):
        return Z3Poly([other])
    return None


_POLY_TERM = re.compile(r"^([12]?)(x(?:\^(\d+))?)?$")


def parse_poly(text: str) -> Z3Poly:
    """Parse ``x^4+2x^3+x+1``, ``2``, ``[1,0,2]`` (ascending), with '-' allowed."""
    s = text.replace(" ", "")
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1]
        return Z3Poly(int(t) for t in body.split(",")) if body else Z3Poly()
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for signed in s.replace("-", "+-").split("+"):
        if not signed:
            continue
        sign = 1
        term = signed
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if term == "0":
            continue
        m = _POLY_TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad polynomial term: {signed!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            power = 0
        else:
            power = int(m.group(3)) if m.group(3) else 1
        coeffs[power] = coeffs.get(power, 0) + sign * coef
    deg = max(coeffs, default=-1)
    return Z3Poly(coeffs.get(i, 0) for i in range(deg + 1))


class ModulusSign(Enum):
    """Which modulus a length-n polynomial code lives under."""

    PLUS = "plus"    # x^n - 1, cyclic
    MINUS = "minus"  # x^n + 1, negacyclic

    @classmethod
    def parse(cls, text: str) -> "ModulusSign":
        t = text.strip().lower()
        if t in ("plus", "pos", "+", "cyclic"):
            return cls.PLUS
        if t in ("minus", "neg", "-", "negacyclic"):
            return cls.MINUS
        raise ValueError(f"unknown modulus sign: {text!r}")

    @property
    def wrap(self) -> int:
        """Scalar picked up on wrap-around: +1 or -1 (as 1 or 2 mod 3)."""
        return 1 if self is ModulusSign.PLUS else 2

    def __str__(self) -> str:
        return self.value


def modulus(n: int, sign: ModulusSign) -> Z3Poly:
    """x^n - 1 for PLUS, x^n + 1 for MINUS."""
    if n < 1:
        raise ValueError("length must be positive")
    tail = -1 if sign is ModulusSign.PLUS else 1
    return Z3Poly([tail] + [0] * (n - 1) + [1])


def gcd(f: Z3Poly, g: Z3Poly) -> Z3Poly:
    """Monic greatest common divisor."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def _powmod(base: Z3Poly, exp: int, mod: Z3Poly) -> Z3Poly:
    out, b = Z3Poly([1]), base % mod
    while exp:
        if exp & 1:
            out = (out * b) % mod
        b = (b * b) % mod
        exp >>= 1
    return out


@dataclass(frozen=True)
class Factorization:
    """unit * product of monic irreducible factors with multiplicities."""

    unit: int
    factors: tuple[tuple[Z3Poly, int], ...]

    def expand(self) -> Z3Poly:
        out = Z3Poly([self.unit])
        for p, e in self.factors:
            out = out * p ** e
        return out

    def divisor_count(self) -> int:
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out

    def __str__(self) -> str:
        head = "" if self.unit == 1 else str(self.unit)
        body = "".join(
            f"({p})" + (f"^{e}" if e > 1 else "") for p, e in self.factors
        )
        return (head + body) or "1"


_X = Z3Poly([0, 1])


def _cube_root(f: Z3Poly) -> Z3Poly:
    # f'(x) = 0 in char 3 means f(x) = g(x)^3 with g made of every
    # third coefficient (Frobenius fixes GF(3)).
    return Z3Poly(f.coeffs[::3])


def _canonical_probes():
    """Monic polynomials in canonical order, used as splitting probes."""
    for deg in itertools.count(1):
        for lower in itertools.product(range(3), repeat=deg):
            yield Z3Poly(list(lower) + [1])


def _split_equal_degree(g: Z3Poly, d: int) -> list[Z3Poly]:
    """Split a squarefree product of irreducibles, all of degree d."""
    if g.degree == d:
        return [g]
    exp = (3 ** d - 1) // 2
    for probe in _canonical_probes():
        s = gcd(g, probe) if probe.degree <= g.degree else None
        if s is not None and 0 < s.degree < g.degree:
            return _split_equal_degree(s, d) + _split_equal_degree(g // s, d)
        w = _powmod(probe, exp, g)
        s = gcd(g, w - Z3Poly([1])) if w else None
        if s is not None and 0 < s.degree < g.degree:
            return _split_equal_degree(s, d) + _split_equal_degree(g // s, d)
    raise AssertionError("unreachable: equal-degree split failed")


def _split_squarefree(w: Z3Poly) -> list[Z3Poly]:
    """Distinct-degree then equal-degree splitting of a squarefree monic."""
    out: list[Z3Poly] = []
    r = w
    h = _X % r if r.degree > 0 else _X
    d = 0
    while r.degree > 0 and 2 * (d + 1) <= r.degree:
        d += 1
        h = _powmod(h, 3, r)
        g = gcd(r, h - _X)  # gcd(r, 0) = r: every factor has degree d
        if g.degree > 0:
            out.extend(_split_equal_degree(g, d))
            r = r // g
            if r.degree > 0:
                h = h % r
    if r.degree > 0:
        out.append(r)
    return out


def _distinct_irreducible_factors(f: Z3Poly) -> set[Z3Poly]:
    """The set of monic irreducible divisors of a monic nonconstant f."""
    if f.degree == 0:
        return set()
    deriv = f.derivative()
    if not deriv:
        return _distinct_irreducible_factors(_cube_root(f))
    w = f // gcd(f, deriv)
    found = set(_split_squarefree(w))
    rest = f
    for p in found:
        while p.divides(rest):
            rest = rest // p
    if rest.degree > 0:
        found |= _distinct_irreducible_factors(rest)
    return found


def factor(f: Z3Poly) -> Factorization:
    """Canonical factorization of a nonconstant polynomial over GF(3)."""
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        raise ConstantPolynomial("cannot factor a constant")
    unit = f.leading
    m = f.monic()
    parts = []
    for p in sorted(_distinct_irreducible_factors(m)):
        e, rest = 0, m
        while p.divides(rest):
            rest = rest // p
            e += 1
        parts.append((p, e))
    result = Factorization(unit, tuple(parts))
    assert result.expand() == f, "factorization self-check failed"
    return result


_IRREDUCIBLES: list[list[Z3Poly]] = [[]]  # index = degree; degree 0 empty


def monic_irreducibles(max_degree: int) -> tuple[Z3Poly, ...]:
    """All monic irreducibles of degree 1..max_degree, canonical order.

    Generated by sieve: a candidate is irreducible when no previously
    found irreducible of at most half its degree divides it.  The cache
    only grows; concurrent readers are safe once a degree is built.
    """
    while len(_IRREDUCIBLES) <= max_degree:
        deg = len(_IRREDUCIBLES)
        lower = [p for ps in _IRREDUCIBLES[: deg // 2 + 1] for p in ps]
        batch = []
        for tail in itertools.product(range(3), repeat=deg):
            cand = Z3Poly(list(tail) + [1])
            if all(cand % p for p in lower if 2 * p.degree <= deg):
                batch.append(cand)
        _IRREDUCIBLES.append(batch)
    return tuple(p for ps in _IRREDUCIBLES[1 : max_degree + 1] for p in ps)


def divisors_of_modulus(n: int, sign: ModulusSign) -> tuple[Z3Poly, ...]:
    """All monic divisors of x^n -+ 1, canonically sorted."""
    fact = factor(modulus(n, sign))
    out = []
    ranges = [range(e + 1) for _, e in fact.factors]
    for exps in itertools.product(*ranges):
        d = Z3Poly([1])
        for (p, _), e in zip(fact.factors, exps):
            d = d * p ** e
        out.append(d)
    out.sort()
    return tuple(out)
