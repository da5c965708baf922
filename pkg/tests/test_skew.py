"""Tests for twisted polynomial arithmetic: right division, right
divisors and the left modules they generate, code counts, the
Hermitian pairing against shifted Euclidean orthogonality, and common
left divisors."""

import itertools
import random

import numpy as np
import pytest

from ternring import gf3linalg
from ternring.errors import (
    EvenLength,
    LengthMismatch,
    NonUnitLeadingCoefficient,
    NotAUnit,
    NotRightDivisor,
    OddS,
)
from ternring.poly import ModulusSign, divisors_of_modulus
from ternring.rcodes import (
    GrayModule,
    RCode,
    as_rvector,
    cyclic_shift,
    gray_vector,
    ring_inner_product,
    skew_constacyclic_section_shift,
    skew_cyclic_shift,
    ungray_vector,
)
from ternring.ring import (
    ELEMENTS,
    IDEMPOTENTS,
    ONE,
    THETA_FIXED_UNITS,
    UNITS,
    V,
    ZERO,
    parse_element,
    scalar,
)
from ternring.skew import (
    SkewPoly,
    count_skew_cyclic,
    gcld,
    hermitian_conjugate,
    hermitian_inner_product,
    is_right_divisor,
    monic_right_divisors,
    one_generator_sqc,
    parse_skew_poly,
    polys_to_vector,
    power_minus_constant,
    skew_count_formula,
    skew_cyclic_code,
    skew_mul,
    skew_right_divmod,
    vector_to_polys,
)
from ternring.skew import _monic_right_divisors_brute

P = parse_skew_poly
E = parse_element

RNG = random.Random(20260815)

X = SkewPoly.x_power(1)


def random_skew(rng, max_deg):
    return SkewPoly([rng.choice(ELEMENTS) for _ in range(rng.randint(0, max_deg) + 1)])


def random_unit_lead(rng, deg):
    return SkewPoly(
        [rng.choice(ELEMENTS) for _ in range(deg)] + [rng.choice(UNITS)]
    )


class TestArithmetic:
    def test_twist_witness(self):
        # x * v applies the automorphism; v * x does not
        assert X * SkewPoly([V]) == P("2vx")
        assert SkewPoly([V]) * X == P("vx")
        assert X * SkewPoly([V]) != SkewPoly([V]) * X

    def test_product_goldens(self):
        assert P("vx") * P("vx") == P("2v^2x^2")
        assert P("x+2") * P("x+1") == P("x^2+2")
        assert P("x+1") * P("x+2") == P("x^2+2")

    def test_parse_and_str_round_trip(self):
        for text in ("0", "1", "x", "x^2+2", "(1+v)x^3+2vx+2", "x+1+v^2"):
            assert str(P(text)) == text

    def test_structure(self):
        z = SkewPoly()
        assert not z and z.degree == -1
        with pytest.raises(ValueError):
            z.lead
        f = P("2x^2+v")
        assert f.degree == 2 and f.lead is E("2") and not f.is_monic
        assert f.coeff(0) is V and f.coeff(5) is ZERO
        assert SkewPoly.x_power(3) == P("x^3")
        with pytest.raises(AttributeError):
            f.coeffs = ()

    def test_add_sub_neg(self):
        f, g = P("x^2+2x+1"), P("2x^2+x")
        assert f + g == P("1")
        assert f - f == SkewPoly()
        assert -f == P("2x^2+x+2")

    def test_associative_and_distributive(self):
        rng = random.Random(11)
        for _ in range(1000):
            f, g, h = (random_skew(rng, 6) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f + g) * h == f * h + g * h

    def test_left_scaling(self):
        f = P("x^2+vx+1")
        r = E("1+2v")
        assert r * f == f.scale_left(r)
        assert r * f == SkewPoly([r]) * f  # constants pick up no twist

    def test_map_theta(self):
        assert P("vx+1+v").map_theta() == P("2vx+1+2v")

    def test_monic_normalization(self):
        assert P("2x+2").monic() == P("x+1")
        assert P("x+v").monic() == P("x+v")
        with pytest.raises(NonUnitLeadingCoefficient):
            P("vx+1").monic()
        with pytest.raises(ValueError):
            SkewPoly().monic()

    def test_skew_mul_alias(self):
        f, g = P("x+1"), P("vx+2")
        assert skew_mul(f, g) == f * g


class TestRightDivision:
    def test_division_goldens(self):
        q, r = skew_right_divmod(power_minus_constant(2, 1), P("x+1"))
        assert (q, r) == (P("x+2"), SkewPoly())
        q, r = skew_right_divmod(power_minus_constant(2, E("2")), P("x+1"))
        assert (q, r) == (P("x+2"), P("2"))

    def test_self_division(self):
        for text in ("x+1", "x^3+vx+2", "x^2+(1+v)x+2v^2"):
            q, r = skew_right_divmod(P(text), P(text))
            assert q == P("1") and not r

    def test_non_unit_divisor_rejected(self):
        with pytest.raises(NonUnitLeadingCoefficient):
            skew_right_divmod(P("x^2+v"), P("vx"))
        with pytest.raises(ZeroDivisionError):
            skew_right_divmod(P("x"), SkewPoly())

    def test_reconstruction_property(self):
        rng = random.Random(7)
        for _ in range(500):
            f = random_skew(rng, 8)
            g = random_unit_lead(rng, rng.randint(0, 4))
            q, r = skew_right_divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree

    def test_power_minus_constant(self):
        assert power_minus_constant(2, 1) == P("x^2+2")
        assert power_minus_constant(3, E("2")) == P("x^3+1")
        assert power_minus_constant(4, E("1+2v^2")) == P("x^4+2+v^2")


class TestRightDivisors:
    def test_goldens(self):
        assert is_right_divisor(P("x+1"), 2, 1)
        assert is_right_divisor(P("x^3+x^2+x+1"), 12, 1)
        assert not is_right_divisor(P("x+1"), 2, E("2"))

    def test_divisor_list_n2(self):
        divs = monic_right_divisors(2, 1)
        assert [str(d) for d in divs] == [
            "1",
            "x+1",
            "x+2",
            "x+1+v^2",
            "x+2+2v^2",
            "x^2+2",
        ]
        assert [str(d) for d in monic_right_divisors(2, E("2"))] == ["1", "x^2+1"]

    def test_scan_matches_brute_force(self):
        for lam in UNITS:
            assert monic_right_divisors(2, lam) == _monic_right_divisors_brute(2, lam)
        assert monic_right_divisors(3, 1) == _monic_right_divisors_brute(3, 1)

    def test_divisor_counts(self):
        assert len(monic_right_divisors(3, 1)) == 4
        assert len(monic_right_divisors(4, 1)) == 42
        assert len(monic_right_divisors(4, E("2"))) == 10

    def test_all_listed_divide(self):
        for lam in (ONE, E("2+2v^2")):
            m = power_minus_constant(4, lam)
            for d in monic_right_divisors(4, lam):
                assert d.is_monic
                assert not skew_right_divmod(m, d)[1]

    def test_non_unit_constant_rejected(self):
        with pytest.raises(NotAUnit):
            monic_right_divisors(2, V)


class TestSkewCyclicCodes:
    def test_rank_goldens(self):
        assert skew_cyclic_code(P("x+1"), 2).rank == 1
        assert skew_cyclic_code(P("x^3+x^2+x+1"), 12).rank == 9
        assert skew_cyclic_code(P("1"), 4).rank == 4

    def test_gray_dimensions(self):
        code = skew_cyclic_code(P("x+1"), 2)
        assert code.gray_dimension == 3
        assert code.is_free_of_expected_rank
        full = skew_cyclic_code(P("1"), 3)
        assert full.gray_dimension == 9
        zero = skew_cyclic_code(power_minus_constant(2, 1), 2)
        assert zero.rank == 0 and zero.gray_dimension == 0

    def test_unit_lead_normalized(self):
        assert skew_cyclic_code(P("2x+2"), 2).f == P("x+1")

    def test_not_right_divisor(self):
        with pytest.raises(NotRightDivisor):
            skew_cyclic_code(P("x+v"), 2)

    def test_exhaustive_small_lengths(self):
        # every monic right divisor generates a free module of rank
        # n - deg f whose Gray dimension is three times that, closed
        # under the twisted shift
        for n in range(1, 6):
            for f in monic_right_divisors(n, 1):
                code = skew_cyclic_code(f, n)
                assert code.rank == n - f.degree
                assert code.gray_dimension == 3 * code.rank
                assert code.module.is_closed_under(skew_cyclic_shift)

    def test_membership(self):
        f = P("x^3+x^2+x+1")
        code = skew_cyclic_code(f, 12)
        vec = tuple(f.coeff(i) for i in range(12))
        assert code.contains(vec)
        assert code.contains(skew_cyclic_shift(vec))
        assert not code.contains((ONE,) + (ZERO,) * 11)


class TestCounts:
    def test_count_goldens(self):
        assert count_skew_cyclic(1) == 8
        assert count_skew_cyclic(3) == 64
        assert count_skew_cyclic(5) == 64

    def test_even_length_rejected(self):
        with pytest.raises(EvenLength):
            count_skew_cyclic(2)

    def test_formula_on_even_length(self):
        # the bare formula value on the canonical factorization of
        # x^12 - 1 = (x+1)^3 (x+2)^3 (x^2+1)^3
        assert skew_count_formula(12) == 4**9

    def test_formula_counts_component_triples(self):
        # the product-of-cubes formula equals the number of component
        # triples (f1, f2, f3) of commutative divisors, i.e. the number
        # of plain cyclic codes of that length
        for n in (1, 3, 5):
            triples = len(divisors_of_modulus(n, ModulusSign.PLUS)) ** 3
            assert count_skew_cyclic(n) == triples

    def test_true_census_is_squared_formula(self):
        # exhaustive enumeration of ALL submodules closed under the
        # twisted shift (principal closures plus joins): the twisted
        # shift swaps the two non-fixed component slots, forcing those
        # component codes equal, so the true count is the SQUARE of the
        # per-component divisor count, not the cube
        assert _closed_submodule_count(1) == 4
        assert count_skew_cyclic(1) == 8  # the formula counts ideals instead

    def test_divisor_triple_census_n3(self):
        # all 64 divisor-triple cyclic codes are distinct; exactly the
        # 16 with equal last two components are twisted-shift-closed
        divs = divisors_of_modulus(3, ModulusSign.PLUS)
        modules = {}
        closed = []
        for f1, f2, f3 in itertools.product(divs, repeat=3):
            code = RCode.cyclic(3, (f1, f2, f3))
            mod = GrayModule(code.gray_image(), 3)
            modules[(f1, f2, f3)] = mod
            if mod.is_closed_under(skew_cyclic_shift):
                closed.append((f1, f2, f3))
        assert len({m.basis.tobytes() for m in modules.values()}) == 64
        assert len(closed) == 16
        assert all(f2 == f3 for _, f2, f3 in closed)


def _closed_submodule_count(n):
    """Count all Gray submodules closed under the twisted shift by
    principal closures and pairwise joins."""
    lattice = {}
    principal = []
    for w in itertools.product(ELEMENTS, repeat=n):
        m = GrayModule.closure([w], [skew_cyclic_shift], n)
        key = m.basis.tobytes()
        if key not in lattice:
            lattice[key] = m
            principal.append(m)
    frontier = list(principal)
    while frontier:
        new = []
        for a in frontier:
            for b in principal:
                joined = GrayModule(np.vstack([a.basis, b.basis]), n)
                key = joined.basis.tobytes()
                if key not in lattice:
                    lattice[key] = joined
                    new.append(joined)
        frontier = new
    return len(lattice)


class TestOddEquivalence:
    def test_odd_lengths_also_plain_cyclic(self):
        from ternring.skew import odd_equivalence_check

        for n in (1, 3, 5):
            for f in monic_right_divisors(n, 1):
                assert odd_equivalence_check(skew_cyclic_code(f, n))

    def test_zero_code(self):
        from ternring.skew import odd_equivalence_check

        assert odd_equivalence_check(skew_cyclic_code(power_minus_constant(3, 1), 3))

    def test_non_closed_witness(self):
        from ternring.skew import SkewCyclicCode, odd_equivalence_check

        # a subspace that is not shift-closed at all
        mod = GrayModule.from_rvectors([(ONE, ZERO, ZERO)], 3)
        fake = SkewCyclicCode(3, P("1"), mod)
        assert not odd_equivalence_check(fake)


class TestVectorPolyMaps:
    def test_round_trip(self):
        rng = random.Random(3)
        for s, l in ((2, 1), (2, 2), (4, 2), (4, 3)):
            for _ in range(20):
                vec = tuple(rng.choice(ELEMENTS) for _ in range(s * l))
                polys = vector_to_polys(vec, s, l)
                assert len(polys) == l
                assert polys_to_vector(polys, s, l) == vec

    def test_layout(self):
        # s blocks of l symbols; polynomial j reads column j upward
        vec = (E("1"), E("2"), V, ZERO)
        p0, p1 = vector_to_polys(vec, 2, 2)
        assert p0 == P("vx+1")
        assert p1 == P("2")

    def test_length_errors(self):
        with pytest.raises(LengthMismatch):
            vector_to_polys((ONE, ZERO), 2, 2)
        with pytest.raises(LengthMismatch):
            polys_to_vector([P("1")], 2, 2)
        with pytest.raises(LengthMismatch):
            polys_to_vector([P("x^2")], 2, 1)


def _gray_basis_vectors(n):
    eye = np.eye(3 * n, dtype=np.int8)
    return [ungray_vector(row) for row in eye]


def _nabla(lam, l):
    def op(vec):
        return skew_constacyclic_section_shift(vec, lam, l)

    return op


def _window_form_matrices(s, l, lam, window):
    """GF(3) bilinear forms (e, c) -> gray coords of dot(shift^k(e), c)
    for k in the window, evaluated on Gray basis pairs."""
    n = s * l
    basis = _gray_basis_vectors(n)
    op = _nabla(lam, l)
    shifted = [list(basis)]
    for _ in range(max(window)):
        shifted.append([op(v) for v in shifted[-1]])
    forms = []
    for k in window:
        mats = [np.zeros((3 * n, 3 * n), dtype=np.int8) for _ in range(3)]
        for i, e in enumerate(shifted[k]):
            for j, c in enumerate(basis):
                g = ring_inner_product(e, c).gray
                for t in range(3):
                    mats[t][i, j] = g[t]
        forms.extend(mats)
    return forms


def _hermitian_form_matrices(s, l, lam):
    """GF(3) bilinear forms (e, c) -> gray coords of every coefficient
    of the Hermitian pairing, on Gray basis pairs."""
    n = s * l
    basis = _gray_basis_vectors(n)
    polys = [vector_to_polys(v, s, l) for v in basis]
    forms = [np.zeros((3 * n, 3 * n), dtype=np.int8) for _ in range(3 * s)]
    for i in range(3 * n):
        for j in range(3 * n):
            h = hermitian_inner_product(polys[i], polys[j], s, lam)
            for k in range(s):
                g = h.coeff(k).gray
                for t in range(3):
                    forms[3 * k + t][i, j] = g[t]
    return forms


def _span(forms):
    return gf3linalg.row_basis(
        np.array([m.reshape(-1) for m in forms], dtype=np.int8)
    )


def _zero_masks(forms, n):
    """Boolean (3^{3n} x 3^{3n}) masks of common zeros, exhaustive over
    all vector pairs (small n only)."""
    size = 3 ** (3 * n)
    G = np.array(
        list(itertools.product(range(3), repeat=3 * n)), dtype=np.int64
    )
    mask = np.ones((size, size), dtype=bool)
    for m in forms:
        vals = (G @ m.astype(np.int64) @ G.T) % 3
        mask &= vals == 0
    return mask


class TestHermitianPairing:
    def test_conjugate_goldens(self):
        assert hermitian_conjugate(P("1"), 2, 1) == P("1")
        assert hermitian_conjugate(P("x"), 2, 1) == P("x")
        assert hermitian_conjugate(P("vx"), 2, 1) == P("2vx")
        assert hermitian_conjugate(P("v"), 2, 1) == P("v")
        # constant term picks up the twisted wrap constant
        lam = E("1+v")  # not fixed by the automorphism
        assert hermitian_conjugate(P("1"), 2, lam) == SkewPoly([lam.theta()])

    def test_conjugate_additive(self):
        rng = random.Random(5)
        for lam in UNITS:
            for _ in range(25):
                a, b = random_skew(rng, 3), random_skew(rng, 3)
                assert hermitian_conjugate(a + b, 4, lam) == hermitian_conjugate(
                    a, 4, lam
                ) + hermitian_conjugate(b, 4, lam)

    def test_pairing_goldens(self):
        zero = hermitian_inner_product([SkewPoly()], [SkewPoly()], 2, 1)
        assert not zero
        # e = (1, 0), c = (0, 1): not orthogonal under every shift, and
        # the pairing is nonzero accordingly
        h = hermitian_inner_product([P("1")], [P("x")], 2, 1)
        assert h
        e, c = (ONE, ZERO), (ZERO, ONE)
        shifted = skew_constacyclic_section_shift(e, 1, 1)
        assert ring_inner_product(shifted, c) is ONE

    def test_left_linear(self):
        rng = random.Random(9)
        for _ in range(50):
            a, b = random_skew(rng, 1), random_skew(rng, 1)
            r = rng.choice(ELEMENTS)
            lhs = hermitian_inner_product([r * a], [b], 2, 1)
            rhs = r * hermitian_inner_product([a], [b], 2, 1)
            assert lhs == rhs

    def test_pairing_errors(self):
        with pytest.raises(OddS):
            hermitian_inner_product([P("1")], [P("1")], 3, 1)
        with pytest.raises(LengthMismatch):
            hermitian_inner_product([P("1")], [P("1"), P("x")], 2, 1)
        with pytest.raises(NotAUnit):
            hermitian_inner_product([P("1")], [P("1")], 2, V)

    def test_matches_shifted_window_all_units(self):
        # pairing zero <=> dot(shift^k(e), c) = 0 for k = 1..s,
        # exhaustively over ALL vector pairs via span equality of the
        # bilinear forms, for every unit wrap constant
        for lam in UNITS:
            for l in (1, 2):
                herm = _span(_hermitian_form_matrices(2, l, lam))
                window = _span(_window_form_matrices(2, l, lam, (1, 2)))
                assert gf3linalg.same_row_space(herm, window)

    def test_matches_all_shift_window_when_wrap_fixed(self):
        # for wrap constants fixed by the automorphism the window 1..s
        # equals the window 0..s-1, so the pairing detects orthogonality
        # under every shift including the identity
        for lam in THETA_FIXED_UNITS:
            for s, l in ((2, 1), (2, 2), (4, 1)):
                herm = _span(_hermitian_form_matrices(s, l, lam))
                all_shift = _span(
                    _window_form_matrices(s, l, lam, tuple(range(s)))
                )
                assert gf3linalg.same_row_space(herm, all_shift)

    def test_all_shift_window_needs_fixed_wrap(self):
        # for a wrap constant moved by the automorphism the identity
        # shift is NOT detected: the zero sets genuinely differ
        lam = next(u for u in UNITS if u.theta() is not u)
        herm = _zero_masks(_hermitian_form_matrices(2, 1, lam), 2)
        shifted = _zero_masks(_window_form_matrices(2, 1, lam, (1, 2)), 2)
        all_shift = _zero_masks(_window_form_matrices(2, 1, lam, (0, 1)), 2)
        assert np.array_equal(herm, shifted)  # exhaustive pointwise check
        assert not np.array_equal(herm, all_shift)

    def test_sampled_agreement_s4(self):
        # 2000 sampled pairs at s = 4: the pairing vanishes exactly when
        # every shifted dot product vanishes (fixed wrap constants)
        rng = random.Random(13)
        checked = 0
        for lam in THETA_FIXED_UNITS[:2]:
            for l in (1, 2):
                n = 4 * l
                op = _nabla(lam, l)
                for _ in range(500):
                    e = tuple(rng.choice(ELEMENTS) for _ in range(n))
                    c = tuple(rng.choice(ELEMENTS) for _ in range(n))
                    h = hermitian_inner_product(
                        vector_to_polys(e, 4, l), vector_to_polys(c, 4, l), 4, lam
                    )
                    shifted = e
                    dots_zero = True
                    for _ in range(4):
                        if ring_inner_product(shifted, c) is not ZERO:
                            dots_zero = False
                        shifted = op(shifted)
                    assert bool(h) == (not dots_zero)
                    checked += 1
        assert checked == 2000

    def test_orthogonal_pairs_pair_to_zero(self):
        # build c in the exact null space of all shifted dots of e, then
        # the pairing must vanish
        rng = random.Random(17)
        lam = THETA_FIXED_UNITS[1]
        l, s = 2, 4
        n = s * l
        basis = _gray_basis_vectors(n)
        op = _nabla(lam, l)
        for _ in range(40):
            e = tuple(rng.choice(ELEMENTS) for _ in range(n))
            rows = []
            shifted = e
            for _ in range(s):
                for t in range(3):
                    rows.append(
                        [ring_inner_product(shifted, b).gray[t] for b in basis]
                    )
                shifted = op(shifted)
            null = gf3linalg.null_space(np.array(rows, dtype=np.int8))
            if null.shape[0] == 0:
                continue
            combo = np.array(
                [rng.randrange(3) for _ in range(null.shape[0])], dtype=np.int8
            )
            c = ungray_vector((combo @ null) % 3)
            h = hermitian_inner_product(
                vector_to_polys(e, s, l), vector_to_polys(c, s, l), s, lam
            )
            assert not h


class TestGcld:
    def test_goldens(self):
        assert gcld([P("x+1")], 2, 1) == P("x+1")
        assert gcld([P("2x+2"), P("2x+2")], 2, 1) == P("x+1")
        assert gcld([P("1"), P("x+1")], 2, 1) == P("1")
        assert gcld([], 4, 1) == power_minus_constant(4, 1)
        assert gcld([SkewPoly()], 2, 1) == power_minus_constant(2, 1)

    def test_result_right_divides_inputs(self):
        rng = random.Random(21)
        successes = 0
        for _ in range(200):
            polys = [random_unit_lead(rng, rng.randint(0, 3)) for _ in range(2)]
            try:
                g = gcld(polys, 4, 1)
            except NonUnitLeadingCoefficient:
                continue
            successes += 1
            assert g.is_monic
            for p in polys + [power_minus_constant(4, 1)]:
                assert not skew_right_divmod(p, g)[1]
        assert successes > 50

    def test_common_divisor_divides_result(self):
        rng = random.Random(23)
        checked = 0
        for d in monic_right_divisors(4, 1):
            if d.degree == 0:
                continue
            for _ in range(5):
                f1 = random_unit_lead(rng, rng.randint(0, 2)) * d
                f2 = random_unit_lead(rng, rng.randint(0, 2)) * d
                try:
                    g = gcld([f1, f2], 4, 1)
                except NonUnitLeadingCoefficient:
                    continue
                assert not skew_right_divmod(g, d)[1]
                checked += 1
        assert checked > 50

    def test_chain_failure_raises(self):
        # two monic right divisors whose Euclidean chain hits a
        # zero-divisor leading coefficient
        with pytest.raises(NonUnitLeadingCoefficient):
            gcld([P("x+1"), P("x+1+v^2")], 2, 1)


class TestOneGenerator:
    def test_rank_goldens(self):
        m = one_generator_sqc([P("x+1")], 2, 1, 1)
        assert m.expected_rank == 1
        assert m.gray_dimension == 3
        assert m.is_free_of_expected_rank
        full = one_generator_sqc([P("1"), P("1")], 2, 2, 1)
        assert full.expected_rank == 2
        assert full.gray_dimension == 6
        assert full.is_free_of_expected_rank

    def test_zero_generator(self):
        m = one_generator_sqc([power_minus_constant(2, 1)], 2, 1, 1)
        assert m.gray_dimension == 0
        assert m.expected_rank == 0
        assert m.is_free_of_expected_rank

    def test_closure_under_left_x(self):
        rng = random.Random(31)
        for lam in UNITS:
            divs = [d for d in monic_right_divisors(4, lam) if d.degree < 4]
            for _ in range(3):
                fs = [rng.choice(divs) for _ in range(2)]
                m = one_generator_sqc(fs, 4, 2, lam)
                # left multiplication by x wraps through the modulus
                # relation AFTER the twist passes over the wrapped
                # coefficient: the wrap factor is theta(lam)
                step = _nabla(lam.theta(), 2)
                assert m.module.is_closed_under(step)

    def test_left_x_action_wrap_factor(self):
        # pointwise, left multiplication by x sends the vector of
        # (f_1, ..., f_l) to the sectioned shift whose wrap factor is
        # theta(lam): the twist passes over the wrapped coefficient
        # before the modulus relation substitutes lam
        rng = random.Random(37)
        from ternring.skew import _reduce

        for lam in UNITS:
            for s, l in ((2, 1), (2, 2), (4, 2)):
                for _ in range(10):
                    vec = tuple(rng.choice(ELEMENTS) for _ in range(s * l))
                    polys = vector_to_polys(vec, s, l)
                    xed = [_reduce(X * p, s, lam) for p in polys]
                    assert polys_to_vector(xed, s, l) == (
                        skew_constacyclic_section_shift(vec, lam.theta(), l)
                    )
        # with a wrap constant moved by the automorphism the literal
        # shift disagrees pointwise: x * (c x^{s-1}) reduces to
        # theta(c) * lam, not theta(lam * c)
        moved = next(u for u in UNITS if u.theta() is not u)
        c = V
        vec = (ZERO, c)
        xed = _reduce(X * vector_to_polys(vec, 2, 1)[0], 2, moved)
        assert xed == SkewPoly([c.theta() * moved])
        literal = skew_constacyclic_section_shift(vec, moved, 1)
        assert polys_to_vector([xed], 2, 1) != literal

    def test_membership_and_generators(self):
        f1, f2 = P("x+1"), P("x+2")
        m = one_generator_sqc([f1, f2], 2, 2, 1)
        assert m.contains(polys_to_vector([f1, f2], 2, 2))
        assert m.generators == (f1, f2)
        assert m.n == 4

    def test_l1_always_free(self):
        # single-component modules are free of the predicted rank
        for s in (2, 4):
            for lam in UNITS:
                for f in monic_right_divisors(s, lam):
                    m = one_generator_sqc([f], s, 1, lam)
                    assert m.has_divisor_chain
                    assert m.expected_rank == s - f.degree
                    assert m.is_free_of_expected_rank

    def test_freeness_can_fail_for_mixed_components(self):
        # frozen counterexample: the common-divisor chain succeeds with
        # gcld = x+1 (predicting Gray dimension 9) but the module has
        # Gray dimension 11 -- not even a multiple of 3, hence not free
        f = [P("x+1"), P("x^2+(v+v^2)x+2+v+v^2")]
        m = one_generator_sqc(f, 4, 2, 1)
        assert m.has_divisor_chain
        assert m.common_divisor == P("x+1")
        assert m.expected_rank == 3
        assert m.gray_dimension == 11
        assert not m.is_free_of_expected_rank

    def test_divisor_chain_can_fail(self):
        m = one_generator_sqc([P("x+1"), P("x+1+v^2")], 2, 2, 1)
        assert not m.has_divisor_chain
        with pytest.raises(NonUnitLeadingCoefficient):
            m.expected_rank

    def test_errors(self):
        with pytest.raises(OddS):
            one_generator_sqc([P("1")], 3, 1, 1)
        with pytest.raises(NotAUnit):
            one_generator_sqc([P("1")], 2, 1, V)
        with pytest.raises(NotRightDivisor):
            one_generator_sqc([P("x+v")], 2, 1, 1)
        with pytest.raises(LengthMismatch):
            one_generator_sqc([P("1")], 2, 2, 1)

    def test_immutability(self):
        m = one_generator_sqc([P("x+1")], 2, 1, 1)
        with pytest.raises(AttributeError):
            m.s = 4
