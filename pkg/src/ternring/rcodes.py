"""Linear codes over the 27-element ring, their Gray images, and shifts.

A linear code C of length n decomposes as e1*C1 + e2*C2 + e3*C3 where
the C_i are ternary codes (the Gray-coordinate blocks) and the e_i are
the orthogonal idempotents.  This module provides:

* vectors over the ring and the blockwise Gray map on them,
* the shift operators (cyclic, constacyclic, sectioned, and their
  twisted variants) together with the matching blockwise ternary maps,
* RCode: component-triple codes with Gray image, Lee distance, duals,
  cardinality, self-orthogonality, and combined generators,
* transport between cyclic and constacyclic codes for odd length,
* GrayModule: a generic submodule engine over Gray coordinates used for
  twisted-shift closures and brute-force checks.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import gf3linalg
from .errors import (
    BadFactorization,
    EvenLength,
    LengthMismatch,
    MixedModuli,
    NotAUnit,
    ZeroCode,
)
from .poly import ModulusSign, Z3Poly, gcd, modulus
from .ring import (
    ELEMENTS,
    IDEMPOTENTS,
    ONE,
    RingElement,
    ZERO,
    from_gray,
    scalar,
)
from .ternary import TernaryPolyCode

__all__ = [
    "RVector",
    "as_rvector",
    "gray_vector",
    "ungray_vector",
    "ring_inner_product",
    "cyclic_shift",
    "negacyclic_shift",
    "constacyclic_shift",
    "section_shift",
    "constacyclic_section_shift",
    "skew_cyclic_shift",
    "skew_constacyclic_shift",
    "skew_section_shift",
    "skew_constacyclic_section_shift",
    "gray_block_cyclic_shift",
    "gray_block_constacyclic_shift",
    "gray_block_section_shift",
    "gray_swap_last_blocks",
    "RCode",
    "decompose_generator",
    "transport_vector",
    "constacyclic_transport",
    "classify_constacyclic",
    "GrayModule",
]

RVector = tuple[RingElement, ...]


def as_rvector(entries) -> RVector:
    """Normalize an iterable of ring elements / ints to a vector."""
    out = []
    for e in entries:
        if isinstance(e, RingElement):
            out.append(e)
        elif isinstance(e, int):
            out.append(scalar(e))
        else:
            raise TypeError(f"cannot place {e!r} in a ring vector")
    return tuple(out)


# -- Gray map on vectors -------------------------------------------------


def gray_vector(vec) -> np.ndarray:
    """Blockwise Gray image: all first coordinates, then all second,
    then all third (length 3n)."""
    vec = as_rvector(vec)
    n = len(vec)
    out = np.empty(3 * n, dtype=np.int8)
    for i, e in enumerate(vec):
        g1, g2, g3 = e.gray
        out[i] = g1
        out[n + i] = g2
        out[2 * n + i] = g3
    return out


def ungray_vector(arr) -> RVector:
    """Inverse of gray_vector."""
    arr = np.asarray(arr, dtype=np.int64) % 3
    if arr.ndim != 1 or arr.shape[0] % 3:
        raise LengthMismatch("Gray vector length must be a multiple of 3")
    n = arr.shape[0] // 3
    return tuple(
        from_gray((int(arr[i]), int(arr[n + i]), int(arr[2 * n + i])))
        for i in range(n)
    )


def ring_inner_product(a, b) -> RingElement:
    """Euclidean inner product sum(a_i * b_i) over the ring."""
    a, b = as_rvector(a), as_rvector(b)
    if len(a) != len(b):
        raise LengthMismatch("vectors must have equal length")
    acc = ZERO
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


# -- shift operators on ring vectors -------------------------------------


def _require_unit(lam: RingElement) -> RingElement:
    if not isinstance(lam, RingElement):
        lam = scalar(lam)
    if not lam.is_unit():
        raise NotAUnit(f"{lam} is not a unit")
    return lam


def constacyclic_shift(vec, lam) -> RVector:
    """(lam*c_{n-1}, c_0, ..., c_{n-2})."""
    vec = as_rvector(vec)
    lam = _require_unit(lam)
    return (lam * vec[-1],) + vec[:-1]


def cyclic_shift(vec) -> RVector:
    return constacyclic_shift(vec, ONE)


def negacyclic_shift(vec) -> RVector:
    return constacyclic_shift(vec, scalar(-1))


def _check_sections(n: int, s: int, l: int) -> None:
    if s < 1 or l < 1 or s * l != n:
        raise BadFactorization(f"length {n} is not {s} blocks of {l}")


def section_shift(vec, s: int, l: int) -> RVector:
    """Rotate the s blocks of l symbols by one block."""
    vec = as_rvector(vec)
    _check_sections(len(vec), s, l)
    return vec[-l:] + vec[:-l]


def constacyclic_section_shift(vec, lam, l: int) -> RVector:
    """Rotate blocks of l symbols, multiplying the wrapped block by lam."""
    vec = as_rvector(vec)
    lam = _require_unit(lam)
    if l < 1 or len(vec) % l:
        raise BadFactorization(f"length {len(vec)} is not a multiple of {l}")
    return tuple(lam * e for e in vec[-l:]) + vec[:-l]


def skew_cyclic_shift(vec) -> RVector:
    """(theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))."""
    return skew_constacyclic_shift(vec, ONE)


def skew_constacyclic_shift(vec, lam) -> RVector:
    """(theta(lam*c_{n-1}), theta(c_0), ..., theta(c_{n-2}))."""
    vec = as_rvector(vec)
    lam = _require_unit(lam)
    return ((lam * vec[-1]).theta(),) + tuple(e.theta() for e in vec[:-1])


def skew_section_shift(vec, s: int, l: int) -> RVector:
    """Block rotation followed by the automorphism entrywise."""
    return tuple(e.theta() for e in section_shift(vec, s, l))


def skew_constacyclic_section_shift(vec, lam, l: int) -> RVector:
    """Block rotation with lam on the wrapped block, then the
    automorphism entrywise."""
    return tuple(e.theta() for e in constacyclic_section_shift(vec, lam, l))


# -- blockwise ternary maps on Gray vectors -------------------------------


def _blocks(arr) -> tuple[np.ndarray, int]:
    arr = np.asarray(arr, dtype=np.int64) % 3
    if arr.ndim != 1 or arr.shape[0] % 3:
        raise LengthMismatch("Gray vector length must be a multiple of 3")
    return arr.astype(np.int8), arr.shape[0] // 3


def gray_block_cyclic_shift(arr) -> np.ndarray:
    """Cyclic shift applied to each of the three blocks in parallel."""
    return gray_block_constacyclic_shift(arr, (1, 1, 1))


def gray_block_constacyclic_shift(arr, multipliers) -> np.ndarray:
    """Per-block constacyclic shift; multipliers are the three ternary
    wrap factors."""
    arr, n = _blocks(arr)
    out = np.empty_like(arr)
    for b, m in enumerate(multipliers):
        block = arr[b * n : (b + 1) * n]
        out[b * n] = (m * int(block[-1])) % 3
        out[b * n + 1 : (b + 1) * n] = block[:-1]
    return out


def gray_block_section_shift(arr, l: int) -> np.ndarray:
    """Rotate each block by l positions (the sectioned shift)."""
    arr, n = _blocks(arr)
    if l < 1 or n % l:
        raise BadFactorization(f"block length {n} is not a multiple of {l}")
    out = np.empty_like(arr)
    for b in range(3):
        block = arr[b * n : (b + 1) * n]
        out[b * n : (b + 1) * n] = np.roll(block, l)
    return out


def gray_swap_last_blocks(arr) -> np.ndarray:
    """Exchange the second and third blocks."""
    arr, n = _blocks(arr)
    out = arr.copy()
    out[n : 2 * n] = arr[2 * n :]
    out[2 * n :] = arr[n : 2 * n]
    return out


# -- component-triple codes ----------------------------------------------

_KINDS = ("cyclic", "negacyclic", "constacyclic")


class RCode:
    """A linear code over the ring given by its three ternary component
    codes (first, second, third Gray coordinate)."""

    __slots__ = ("n", "kind", "lam", "components")

    def __init__(self, kind: str, components, lam: RingElement = ONE):
        if kind not in _KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        components = tuple(components)
        if len(components) != 3:
            raise ValueError("exactly three components required")
        n = components[0].n
        if any(c.n != n for c in components):
            raise LengthMismatch("components must share the code length")
        lam = _require_unit(lam)
        if kind == "cyclic":
            expected = (1, 1, 1)
            lam = ONE
        elif kind == "negacyclic":
            expected = (2, 2, 2)
            lam = scalar(-1)
        else:
            expected = lam.gray
        signs = tuple(c.sign.wrap for c in components)
        if signs != expected:
            raise MixedModuli(
                f"component moduli {signs} do not match the wrap constants {expected}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("RCode is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def cyclic(cls, n: int, generators) -> "RCode":
        comps = tuple(
            TernaryPolyCode(n, ModulusSign.PLUS, g) for g in generators
        )
        return cls("cyclic", comps)

    @classmethod
    def negacyclic(cls, n: int, generators) -> "RCode":
        comps = tuple(
            TernaryPolyCode(n, ModulusSign.MINUS, g) for g in generators
        )
        return cls("negacyclic", comps)

    @classmethod
    def constacyclic(cls, n: int, lam, generators) -> "RCode":
        lam = _require_unit(lam)
        signs = [ModulusSign.PLUS if t == 1 else ModulusSign.MINUS for t in lam.gray]
        comps = tuple(
            TernaryPolyCode(n, sign, g) for sign, g in zip(signs, generators)
        )
        return cls("constacyclic", comps, lam)

    @classmethod
    def from_sign(cls, n: int, sign: ModulusSign, generators) -> "RCode":
        if sign is ModulusSign.PLUS:
            return cls.cyclic(n, generators)
        return cls.negacyclic(n, generators)

    def __eq__(self, other):
        if not isinstance(other, RCode):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.lam is other.lam
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.kind, self.lam, self.components))

    def __repr__(self):
        gens = ", ".join(str(c.g) for c in self.components)
        return f"RCode({self.kind}, n={self.n}, generators=({gens}))"

    # -- structure -------------------------------------------------------

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(c.k for c in self.components)

    @property
    def cardinality_log3(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.cardinality_log3 == 0

    @property
    def sign(self) -> ModulusSign:
        """Common modulus sign; raises when the components are mixed."""
        signs = {c.sign for c in self.components}
        if len(signs) != 1:
            raise MixedModuli("components use different moduli")
        return next(iter(signs))

    def gray_image(self) -> np.ndarray:
        """Block-diagonal ternary generator matrix of the Gray image."""
        mats = [c.generator_matrix() for c in self.components]
        k = sum(m.shape[0] for m in mats)
        out = np.zeros((k, 3 * self.n), dtype=np.int8)
        row = 0
        for b, m in enumerate(mats):
            out[row : row + m.shape[0], b * self.n : (b + 1) * self.n] = m
            row += m.shape[0]
        return out

    def membership(self, vec) -> bool:
        vec = as_rvector(vec)
        if len(vec) != self.n:
            raise LengthMismatch(f"expected a length-{self.n} vector")
        g = gray_vector(vec)
        return all(
            c.membership(g[b * self.n : (b + 1) * self.n])
            for b, c in enumerate(self.components)
        )

    def codewords(self):
        """Iterator over all codewords as ring vectors (small codes)."""
        blocks = [c.codewords() for c in self.components]
        for w1, w2, w3 in itertools.product(*blocks):
            yield tuple(
                from_gray((int(w1[i]), int(w2[i]), int(w3[i])))
                for i in range(self.n)
            )

    # -- operations --------------------------------------------------------

    def lee_distance(self) -> int:
        """Minimum Lee weight of a nonzero codeword = min over nonzero
        components of their Hamming distances."""
        live = [c for c in self.components if c.k > 0]
        if not live:
            raise ZeroCode("the zero code has no nonzero codeword")
        return min(c.min_distance() for c in live)

    def dual(self) -> "RCode":
        comps = tuple(c.dual() for c in self.components)
        return RCode(self.kind, comps, self.lam)

    def contains_dual(self) -> bool:
        return all(c.contains_dual() for c in self.components)

    def failing_dual_components(self) -> tuple[int, ...]:
        """1-based indices of components violating the divisibility
        criterion."""
        return tuple(
            i + 1 for i, c in enumerate(self.components) if not c.contains_dual()
        )

    def is_self_orthogonal(self) -> bool:
        """All pairs of codewords have zero inner product, equivalently
        each ternary component is self-orthogonal."""
        for c in self.components:
            g = c.generator_matrix()
            if g.shape[0] and np.any(gf3linalg.mat_mul(g, g.T)):
                return False
        return True

    def combined_generator(self) -> tuple[RingElement, ...]:
        """Coefficients (ascending) of e1*f1 + e2*f2 + e3*f3; a single
        generator whose decomposition reproduces the code."""
        sign = self.sign  # raises MixedModuli when mixed
        del sign
        # a zero component is generated by the modulus, which vanishes in
        # the quotient, so it contributes nothing
        polys = [None if c.is_zero else c.g for c in self.components]
        live = [p for p in polys if p is not None]
        if not live:
            return ()
        length = max(p.degree for p in live) + 1
        coeffs = []
        for i in range(length):
            parts = [
                p.coeffs[i] if p is not None and i <= p.degree else 0
                for p in polys
            ]
            coeffs.append(from_gray(tuple(parts)))
        while coeffs and coeffs[-1] is ZERO:
            coeffs.pop()
        return tuple(coeffs)


def decompose_generator(coeffs, n: int, sign: ModulusSign) -> RCode:
    """Code generated by a single ring polynomial: component i is the
    ternary code generated by gcd(f_i, modulus) where f_i collects the
    i-th Gray coordinate of each coefficient."""
    coeffs = as_rvector(coeffs)
    if len(coeffs) > n:
        raise LengthMismatch("generator longer than the code length")
    m = modulus(n, sign)
    gens = []
    for b in range(3):
        f = Z3Poly([e.gray[b] for e in coeffs])
        gens.append(gcd(f, m) if f else m)
    return RCode.from_sign(n, sign, gens)


# -- constacyclic transport ----------------------------------------------


def transport_vector(vec, lam) -> RVector:
    """(a_0, lam*a_1, lam^2*a_2, ...); since every unit squares to 1
    the multipliers alternate 1, lam, 1, lam, ..."""
    vec = as_rvector(vec)
    lam = _require_unit(lam)
    return tuple(e if i % 2 == 0 else lam * e for i, e in enumerate(vec))


def constacyclic_transport(code: RCode, lam) -> RCode:
    """Image of a cyclic code under the coordinatewise multiplier map;
    the result is closed under the lam-constacyclic shift.  Component i
    keeps its dimension, with generator g_i(t*x) normalized monic where
    t is the i-th Gray coordinate of lam."""
    lam = _require_unit(lam)
    if code.kind != "cyclic":
        raise ValueError("transport starts from a cyclic code")
    if code.n % 2 == 0:
        raise EvenLength("transport requires odd length")
    gens = []
    for t, comp in zip(lam.gray, code.components):
        g = comp.g
        if t == 1:
            gens.append(g)
        else:
            scaled = Z3Poly([c * pow(t, i, 3) for i, c in enumerate(g.coeffs)])
            gens.append(scaled.monic())
    return RCode.constacyclic(code.n, lam, gens)


def classify_constacyclic(lam) -> tuple[str, str, str]:
    """Per-component behavior of a lam-constacyclic code: component i is
    cyclic when the i-th Gray coordinate of lam is 1, negacyclic when
    it is 2."""
    lam = _require_unit(lam)
    return tuple("cyclic" if t == 1 else "negacyclic" for t in lam.gray)


# -- generic Gray-coordinate submodules ------------------------------------


class GrayModule:
    """A submodule of the ambient module of length-n ring vectors, stored
    as the GF(3) row space of the Gray images of its elements.

    A subspace of Gray space is a submodule exactly when it is closed
    under the linear map induced by multiplication by v; spans produced
    by from_rvectors are closed by construction."""

    __slots__ = ("n", "basis")

    def __init__(self, rows, n: int):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, 3 * n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", gf3linalg.row_basis(rows % 3))

    def __setattr__(self, name, value):
        raise AttributeError("GrayModule is immutable")

    @classmethod
    def from_rvectors(cls, vectors, n: int | None = None) -> "GrayModule":
        """Submodule generated by ring vectors: the span of the Gray
        images of e1*g, e2*g, e3*g for each generator g (scaling by a
        ring element acts blockwise, so these projections generate the
        full orbit)."""
        vectors = [as_rvector(v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValueError("need vectors or an explicit length")
            n = len(vectors[0])
        rows = []
        for v in vectors:
            if len(v) != n:
                raise LengthMismatch("generator lengths differ")
            for e in IDEMPOTENTS:
                rows.append(gray_vector(tuple(e * x for x in v)))
        if not rows:
            rows = np.zeros((0, 3 * n), dtype=np.int8)
        return cls(rows, n)

    @classmethod
    def closure(cls, vectors, ops, n: int | None = None) -> "GrayModule":
        """Smallest submodule containing the given ring vectors and
        stable under each of the given vector maps (which must send
        submodules to submodules, e.g. additive theta-semilinear maps)."""
        current = cls.from_rvectors(vectors, n)
        while True:
            images = [op(v) for v in current.basis_rvectors() for op in ops]
            if not images:
                return current
            rows = np.vstack(
                [current.basis] + [gray_vector(v).reshape(1, -1) for v in images]
            )
            grown = cls(rows, current.n)
            if grown.rank == current.rank:
                return grown
            current = grown

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    @property
    def block_ranks(self) -> tuple[int, int, int]:
        """Ranks of the three Gray-coordinate blocks of the basis."""
        return tuple(
            gf3linalg.rank(self.basis[:, b * self.n : (b + 1) * self.n])
            for b in range(3)
        )

    def contains_gray(self, row) -> bool:
        return gf3linalg.row_space_contains(self.basis, np.asarray(row).reshape(1, -1))

    def contains(self, vec) -> bool:
        return self.contains_gray(gray_vector(vec))

    def basis_rvectors(self) -> list[RVector]:
        return [ungray_vector(row) for row in self.basis]

    def is_v_closed(self) -> bool:
        """Closure under entrywise multiplication by v (the submodule
        criterion for a Gray-coordinate subspace)."""
        from .ring import V

        return self.is_closed_under(lambda vec: tuple(V * e for e in vec))

    def is_closed_under(self, op) -> bool:
        """Whether the module is stable under a map on ring vectors."""
        if self.rank == 0:
            return True
        images = [gray_vector(op(v)) for v in self.basis_rvectors()]
        return gf3linalg.row_space_contains(self.basis, np.array(images))

    def dual(self) -> "GrayModule":
        """Orthogonal module: Gray rows orthogonal to every basis row
        (blockwise ternary duality matches ring-level duality)."""
        if self.rank == 0:
            return GrayModule(np.eye(3 * self.n, dtype=np.int8), self.n)
        return GrayModule(gf3linalg.null_space(self.basis), self.n)

    def lee_distance(self) -> int:
        if self.rank == 0:
            raise ZeroCode("the zero module has no nonzero element")
        return gf3linalg.min_weight(self.basis)

    def __eq__(self, other):
        if not isinstance(other, GrayModule):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.n, self.basis.tobytes()))
