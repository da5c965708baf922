"""Skew polynomials over the 27-element ring and the codes they generate.

The skew ring twists multiplication by the order-2 automorphism:
(a x^i)(b x^j) = a theta^i(b) x^{i+j}.  Right division by polynomials
with unit leading coefficient is exact, which gives:

* right divisors of x^n - lam and the left modules they generate,
* skew cyclic / skew quasi-twisted codes as Gray-coordinate modules,
* a Hermitian pairing on the quotient module that detects Euclidean
  orthogonality under all twisted sectioned shifts at once,
* greatest common divisors along right-division Euclidean chains.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (
    EvenLength,
    LengthMismatch,
    NonUnitLeadingCoefficient,
    NotAUnit,
    NotRightDivisor,
    OddS,
)
from .poly import ModulusSign, factor, modulus
from .rcodes import (
    GrayModule,
    as_rvector,
    cyclic_shift,
    gray_vector,
    skew_constacyclic_section_shift,
    skew_cyclic_shift,
)
from .ring import (
    ELEMENTS,
    IDEMPOTENTS,
    ONE,
    RingElement,
    ZERO,
    format_ring_poly,
    from_gray,
    parse_ring_poly,
    scalar,
)

__all__ = [
    "SkewPoly",
    "parse_skew_poly",
    "skew_mul",
    "skew_right_divmod",
    "power_minus_constant",
    "is_right_divisor",
    "monic_right_divisors",
    "SkewCyclicCode",
    "skew_cyclic_code",
    "count_skew_cyclic",
    "skew_count_formula",
    "odd_equivalence_check",
    "vector_to_polys",
    "polys_to_vector",
    "hermitian_conjugate",
    "hermitian_inner_product",
    "gcld",
    "SkewQCModule",
    "one_generator_sqc",
]


def _as_element(value) -> RingElement:
    return value if isinstance(value, RingElement) else scalar(value)


class SkewPoly:
    """Immutable skew polynomial; coefficients ascending, multiplication
    twisted by the automorphism."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, SkewPoly):
            coeffs = coeffs.coeffs
        coeffs = [_as_element(c) for c in coeffs]
        while coeffs and coeffs[-1] is ZERO:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    # -- structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> RingElement:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] is ONE

    def coeff(self, i: int) -> RingElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return format_ring_poly(self.coeffs)

    def __repr__(self):
        return f"SkewPoly({self})"

    def sort_key(self):
        return (self.degree, tuple(reversed([c.index for c in self.coeffs])))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return SkewPoly(out)

    def __neg__(self):
        return SkewPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Twisted product: x moves past a coefficient by applying the
        automorphism."""
        if isinstance(other, RingElement):
            other = SkewPoly([other])
        if not isinstance(other, SkewPoly):
            return NotImplemented
        if not self or not other:
            return SkewPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a is ZERO:
                continue
            for j, b in enumerate(other.coeffs):
                tb = b if i % 2 == 0 else b.theta()
                out[i + j] = out[i + j] + a * tb
        return SkewPoly(out)

    def __rmul__(self, other):
        if isinstance(other, RingElement):
            # constants commute past nothing: plain left scaling
            return SkewPoly([other * c for c in self.coeffs])
        return NotImplemented

    def scale_left(self, c: RingElement) -> "SkewPoly":
        return SkewPoly([_as_element(c) * a for a in self.coeffs])

    def map_theta(self) -> "SkewPoly":
        return SkewPoly([c.theta() for c in self.coeffs])

    def monic(self) -> "SkewPoly":
        """Left-scale by the inverse of the leading coefficient."""
        if not self:
            raise ValueError("cannot normalize the zero polynomial")
        u = self.lead
        if not u.is_unit():
            raise NonUnitLeadingCoefficient(
                f"leading coefficient {u} is not a unit"
            )
        if u is ONE:
            return self
        return self.scale_left(u.inverse())

    @classmethod
    def x_power(cls, k: int, c=ONE) -> "SkewPoly":
        return cls([ZERO] * k + [_as_element(c)])


def parse_skew_poly(text: str) -> SkewPoly:
    return SkewPoly(parse_ring_poly(text))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f * g


def power_minus_constant(n: int, lam) -> SkewPoly:
    """x^n - lam."""
    lam = _as_element(lam)
    return SkewPoly([-lam] + [ZERO] * (n - 1) + [ONE])


def skew_right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Quotient and remainder with f = q*g + r, deg r < deg g; the
    divisor must have a unit leading coefficient."""
    if not g:
        raise ZeroDivisionError("skew division by zero")
    u = g.lead
    if not u.is_unit():
        raise NonUnitLeadingCoefficient(
            f"leading coefficient {u} is not a unit"
        )
    u_inv = u.inverse()
    rem = list(f.coeffs)
    dg = g.degree
    q = [ZERO] * max(len(rem) - dg, 0)
    while len(rem) > dg and any(c is not ZERO for c in rem):
        while rem and rem[-1] is ZERO:
            rem.pop()
        if len(rem) <= dg:
            break
        t = len(rem) - 1 - dg
        # leading term of (c x^t) * g is c * theta^t(u) x^{deg f}
        c = rem[-1] * (u_inv if t % 2 == 0 else u_inv.theta())
        q[t] = c
        for j, b in enumerate(g.coeffs):
            tb = b if t % 2 == 0 else b.theta()
            rem[t + j] = rem[t + j] - c * tb
    return SkewPoly(q), SkewPoly(rem)


def is_right_divisor(f: SkewPoly, n: int, lam) -> bool:
    """Whether x^n - lam = q*f for some q."""
    _, r = skew_right_divmod(power_minus_constant(n, lam), f)
    return not r


def monic_right_divisors(n: int, lam) -> tuple[SkewPoly, ...]:
    """All monic right divisors of x^n - lam, in canonical order.

    The first Gray coordinate is fixed by the automorphism, so taking it
    coefficientwise is a homomorphism onto ternary polynomials; a right
    divisor must project to a monic divisor of x^n - t where t is the
    first Gray coordinate of lam.  The other two Gray coordinates twist
    into each other and are sieved by a vectorized right division over
    all coefficient combinations; every survivor is confirmed by an
    actual skew right division."""
    lam = _as_element(lam)
    if not lam.is_unit():
        raise NotAUnit(f"{lam} is not a unit")
    m = power_minus_constant(n, lam)
    sign1 = ModulusSign.PLUS if lam.gray[0] == 1 else ModulusSign.MINUS
    base_divisors = _commutative_divisors(n, sign1)
    m23 = np.array(
        [[m.coeff(i).gray[1], m.coeff(i).gray[2]] for i in range(n + 1)],
        dtype=np.int64,
    )
    found = [SkewPoly([ONE])]
    for d in range(1, n + 1):
        firsts = [g for g in base_divisors if g.degree == d]
        if not firsts:
            continue
        tails = _pair_tails(d)
        survivors = _pair_division_sieve(m23, tails, d)
        for g1 in firsts:
            for tail in survivors:
                coeffs = [
                    from_gray((g1.coeffs[i], int(tail[i, 0]), int(tail[i, 1])))
                    for i in range(d)
                ]
                coeffs.append(ONE)
                cand = SkewPoly(coeffs)
                _, r = skew_right_divmod(m, cand)
                if not r:
                    found.append(cand)
    found.sort(key=SkewPoly.sort_key)
    return tuple(found)


def _pair_tails(d: int) -> np.ndarray:
    """All 9^d coefficient tails over pairs of ternary digits, shape
    (9^d, d, 2)."""
    grid = np.array(
        list(itertools.product(range(3), repeat=2 * d)), dtype=np.int64
    )
    return grid.reshape(-1, d, 2)


def _pair_division_sieve(m23: np.ndarray, tails: np.ndarray, d: int) -> np.ndarray:
    """Batch right division in the twisted pair ring (componentwise
    products, components swapping when passing x): returns the tails
    whose monic candidate leaves zero remainder against m23."""
    n = m23.shape[0] - 1
    batch = tails.shape[0]
    lead = np.ones((batch, 1, 2), dtype=np.int64)
    divisors = np.concatenate([tails, lead], axis=1)  # (B, d+1, 2)
    swapped = divisors[:, :, ::-1]
    rem = np.tile(m23, (batch, 1, 1))
    for t in range(n - d, -1, -1):
        q = rem[:, t + d, :].copy()
        g = divisors if t % 2 == 0 else swapped
        rem[:, t : t + d + 1, :] = (
            rem[:, t : t + d + 1, :] - q[:, None, :] * g
        ) % 3
    keep = ~np.any(rem[:, :d, :], axis=(1, 2))
    return tails[keep]


def _monic_right_divisors_brute(n: int, lam) -> tuple[SkewPoly, ...]:
    """Reference scan over all 27^d monic candidates (small n only)."""
    lam = _as_element(lam)
    m = power_minus_constant(n, lam)
    found = []
    for d in range(n + 1):
        for tail in itertools.product(ELEMENTS, repeat=d):
            cand = SkewPoly(list(tail) + [ONE])
            if not skew_right_divmod(m, cand)[1]:
                found.append(cand)
    found.sort(key=SkewPoly.sort_key)
    return tuple(found)


def _commutative_divisors(n: int, sign: ModulusSign):
    from .poly import divisors_of_modulus

    return divisors_of_modulus(n, sign)


# -- skew cyclic codes ------------------------------------------------------


def _left_x_step(lam, l: int):
    """Left multiplication by x on length-s*l vectors of the quotient
    module: the twisted sectioned shift whose wrap factor is theta(lam)
    (the automorphism passes over the wrapped coefficient before the
    modulus relation x^s = lam applies)."""
    lam = _as_element(lam)
    tl = lam.theta()

    def step(vec):
        return skew_constacyclic_section_shift(vec, tl, l)

    return step


class SkewCyclicCode:
    """Left module of length-n vectors generated by a monic right
    divisor of x^n - 1 under the twisted cyclic shift."""

    __slots__ = ("n", "f", "module")

    def __init__(self, n: int, f: SkewPoly, module: GrayModule):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "module", module)

    def __setattr__(self, name, value):
        raise AttributeError("SkewCyclicCode is immutable")

    @property
    def rank(self) -> int:
        return self.n - self.f.degree

    @property
    def gray_dimension(self) -> int:
        return self.module.rank

    @property
    def is_free_of_expected_rank(self) -> bool:
        return self.gray_dimension == 3 * self.rank

    def contains(self, vec) -> bool:
        return self.module.contains(vec)

    def __repr__(self):
        return f"SkewCyclicCode(n={self.n}, f={self.f})"


def skew_cyclic_code(f: SkewPoly, n: int) -> SkewCyclicCode:
    """Module generated by a monic right divisor of x^n - 1; spanned by
    f, xf, ..., x^{n-deg f-1}f and closed under the twisted shift."""
    if not isinstance(f, SkewPoly):
        f = SkewPoly(f)
    f = f.monic()
    if not is_right_divisor(f, n, ONE):
        raise NotRightDivisor(f"{f} does not right-divide x^{n}+2")
    if f.degree == n:
        mod = GrayModule(np.zeros((0, 3 * n), dtype=np.int8), n)
        return SkewCyclicCode(n, f, mod)
    seeds = []
    g = f
    for _ in range(n - f.degree):
        seeds.append(tuple(g.coeff(i) for i in range(n)))
        g = SkewPoly([ZERO, ONE]) * g  # multiply by x on the left
    mod = GrayModule.closure(seeds, [skew_cyclic_shift], n)
    return SkewCyclicCode(n, f, mod)


def count_skew_cyclic(n: int) -> int:
    """Number of twisted cyclic codes of odd length given by the
    product formula over the factorization of x^n - 1."""
    if n % 2 == 0:
        raise EvenLength("the count formula requires odd length")
    return skew_count_formula(n)


def skew_count_formula(n: int) -> int:
    """prod (multiplicity + 1)^3 over the distinct irreducible factors
    of x^n - 1 (the formula value on the canonical factorization)."""
    fac = factor(modulus(n, ModulusSign.PLUS))
    out = 1
    for _, mult in fac.factors:
        out *= (mult + 1) ** 3
    return out


def odd_equivalence_check(code: SkewCyclicCode) -> bool:
    """Whether the twisted-shift-closed module is also closed under the
    plain cyclic shift (for odd length this always holds)."""
    return code.module.is_closed_under(cyclic_shift)


# -- vector <-> polynomial tuple maps ---------------------------------------


def vector_to_polys(vec, s: int, l: int) -> tuple[SkewPoly, ...]:
    """Read a length-s*l vector laid out as s blocks of l symbols into l
    polynomials: column j collects the coefficients of the j-th poly."""
    vec = as_rvector(vec)
    if len(vec) != s * l:
        raise LengthMismatch(f"expected length {s * l}, got {len(vec)}")
    return tuple(
        SkewPoly([vec[i * l + j] for i in range(s)]) for j in range(l)
    )


def polys_to_vector(polys, s: int, l: int):
    """Inverse of vector_to_polys; each polynomial must have degree < s."""
    polys = [p if isinstance(p, SkewPoly) else SkewPoly(p) for p in polys]
    if len(polys) != l:
        raise LengthMismatch(f"expected {l} polynomials, got {len(polys)}")
    if any(p.degree >= s for p in polys):
        raise LengthMismatch(f"polynomial degree must be below {s}")
    return tuple(polys[j].coeff(i) for i in range(s) for j in range(l))


# -- Hermitian pairing ------------------------------------------------------


def _reduce(f: SkewPoly, s: int, lam) -> SkewPoly:
    _, r = skew_right_divmod(f, power_minus_constant(s, lam))
    return r


def hermitian_conjugate(p: SkewPoly, s: int, lam) -> SkewPoly:
    """Conjugation reversing x-powers modulo x^s - lam.

    The term c x^k maps to theta^k(c) w_k x^{(s-k) mod s} with wrap
    constants w_0 = theta(lam), w_k = 1 for odd k, and w_k = lam
    theta(lam) for even k >= 2.  These are the unique termwise factors
    (up to a unit) making each coefficient of a(x) conj(b(x)) a twisted
    Euclidean product of a shifted vector with the other vector, so the
    pairing vanishes exactly when the vectors are orthogonal under the
    twisted sectioned shift applied 1..s times.  When lam is fixed by
    the automorphism every w_k is then a unit multiple of lam^k and the
    shift window 1..s is equivalent to 0..s-1."""
    lam = _as_element(lam)
    tl = lam.theta()
    w_even = lam * tl
    out = [ZERO] * s
    for k, c in enumerate(p.coeffs):
        if c is ZERO:
            continue
        if k == 0:
            out[0] = out[0] + c * tl
        elif k % 2:
            out[s - k] = out[s - k] + c.theta()
        else:
            out[s - k] = out[s - k] + c * w_even
    return SkewPoly(out)


def hermitian_inner_product(a, b, s: int, lam) -> SkewPoly:
    """Sum of a_j(x) * conj(b_j(x)) reduced modulo x^s - lam; zero
    exactly when the underlying vectors stay Euclidean-orthogonal under
    every twisted sectioned shift."""
    if s % 2:
        raise OddS("the Hermitian pairing needs an even number of blocks")
    a = [p if isinstance(p, SkewPoly) else SkewPoly(p) for p in a]
    b = [p if isinstance(p, SkewPoly) else SkewPoly(p) for p in b]
    if len(a) != len(b):
        raise LengthMismatch("vectors must have equal length")
    lam = _as_element(lam)
    if not lam.is_unit():
        raise NotAUnit(f"{lam} is not a unit")
    acc = SkewPoly()
    for pa, pb in zip(a, b):
        acc = acc + pa * hermitian_conjugate(_reduce(pb, s, lam), s, lam)
    return _reduce(acc, s, lam)


# -- gcld -------------------------------------------------------------------


def _right_gcd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    while b:
        _, r = skew_right_divmod(a, b)
        a, b = b, r
    return a.monic()


def gcld(polys, s: int, lam) -> SkewPoly:
    """Monic common divisor of the given polynomials and x^s - lam along
    the right-division Euclidean chain: it right-divides every input,
    and every common right divisor with unit leading coefficient
    right-divides it."""
    polys = [p if isinstance(p, SkewPoly) else SkewPoly(p) for p in polys]
    g = power_minus_constant(s, lam)
    for p in polys:
        if p:
            g = _right_gcd(g, p)
    return g


# -- one-generator quasi-twisted modules ------------------------------------


class SkewQCModule:
    """Module of length-s*l vectors generated by one polynomial vector
    under left multiplication, closed under the twisted sectioned
    shift."""

    __slots__ = ("s", "l", "lam", "generators", "common_divisor", "module")

    def __init__(self, s, l, lam, generators, common_divisor, module):
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "common_divisor", common_divisor)
        object.__setattr__(self, "module", module)

    def __setattr__(self, name, value):
        raise AttributeError("SkewQCModule is immutable")

    @property
    def n(self) -> int:
        return self.s * self.l

    @property
    def gray_dimension(self) -> int:
        return self.module.rank

    @property
    def has_divisor_chain(self) -> bool:
        """Whether the Euclidean chain for the common divisor stayed on
        unit leading coefficients (it need not in a non-domain)."""
        return self.common_divisor is not None

    @property
    def expected_rank(self) -> int:
        if self.common_divisor is None:
            raise NonUnitLeadingCoefficient(
                "the common-divisor chain hit a non-unit leading coefficient"
            )
        return self.s - self.common_divisor.degree

    @property
    def is_free_of_expected_rank(self) -> bool:
        return self.gray_dimension == 3 * self.expected_rank

    def contains(self, vec) -> bool:
        return self.module.contains(vec)

    def __repr__(self):
        gens = ", ".join(str(p) for p in self.generators)
        return (
            f"SkewQCModule(s={self.s}, l={self.l}, lam={self.lam}, "
            f"generators=({gens}))"
        )


def one_generator_sqc(polys, s: int, l: int, lam) -> SkewQCModule:
    """Module generated by (f_1, ..., f_l) under left multiplication by
    ring constants and x; each nonzero f_j must be a monic right divisor
    of x^s - lam."""
    if s % 2:
        raise OddS("sectioned modules need an even number of blocks")
    lam = _as_element(lam)
    if not lam.is_unit():
        raise NotAUnit(f"{lam} is not a unit")
    fs = []
    for p in polys:
        p = p if isinstance(p, SkewPoly) else SkewPoly(p)
        p = _reduce(p, s, lam)
        if p:
            p = p.monic()
            if not is_right_divisor(p, s, lam):
                raise NotRightDivisor(f"{p} does not right-divide x^{s}-({lam})")
        fs.append(p)
    fs = tuple(fs)
    if len(fs) != l:
        raise LengthMismatch(f"expected {l} polynomials, got {len(fs)}")
    n = s * l
    if not any(fs):
        mod = GrayModule(np.zeros((0, 3 * n), dtype=np.int8), n)
        return SkewQCModule(s, l, lam, fs, power_minus_constant(s, lam), mod)
    seed = polys_to_vector(fs, s, l)
    mod = GrayModule.closure([seed], [_left_x_step(lam, l)], n)
    try:
        g = gcld([p for p in fs if p], s, lam)
    except NonUnitLeadingCoefficient:
        g = None
    return SkewQCModule(s, l, lam, fs, g, mod)
