"""Tests for dual-containment checking, CSS parameter derivation,
exhaustive scans, and the frozen reference table."""

import pytest

from ternring.errors import NotDualContaining, ZeroCode
from ternring.poly import ModulusSign, parse_poly
from ternring.quantum import (
    EXPECTED_FLAGS,
    QuantumParams,
    css_params,
    scan_dual_containing,
    verify_reference_table,
)
from ternring.rcodes import RCode
from ternring.ternary import TernaryPolyCode

P = parse_poly
PLUS, MINUS = ModulusSign.PLUS, ModulusSign.MINUS


def code(n, sign, texts):
    return RCode.from_sign(n, sign, tuple(P(t) for t in texts))


class TestQuantumParams:
    def test_formatting(self):
        p = QuantumParams(18, 6, 2)
        assert str(p) == "[[18,6,2]]"
        assert p.as_tuple() == (18, 6, 2)


class TestCssParams:
    def test_reference_goldens(self):
        cases = [
            (6, PLUS, ["x^2+2"] * 3, (18, 6, 2)),
            (12, PLUS, ["x^3+x^2+x+1"] * 3, (36, 18, 2)),
            (27, PLUS, ["x^6+x^3+1"] * 3, (81, 45, 2)),
            (30, PLUS, ["x^4+x^3+x^2+x+1", "x^4+2x^3+x^2+2x+1",
                        "x^4+x^3+x^2+x+1"], (90, 66, 2)),
            (3, MINUS, ["x+1"] * 3, (9, 3, 2)),
            (10, MINUS, ["x^4+x^3+2x+1", "x^4+2x^3+x+1",
                         "x^4+2x^3+x+1"], (30, 6, 4)),
            (12, MINUS, ["x^2+x+2", "2x^2+x+1", "x^2+2x+2"], (36, 24, 2)),
        ]
        for n, sign, gens, expected in cases:
            assert css_params(code(n, sign, gens)).as_tuple() == expected

    def test_not_dual_containing(self):
        with pytest.raises(NotDualContaining) as err:
            css_params(code(8, PLUS, ["x^2+1"] * 3))
        assert err.value.failing == (1, 2, 3)
        # full components contain their (zero) dual; only the middle
        # component fails here
        with pytest.raises(NotDualContaining) as err:
            css_params(code(8, PLUS, ["1", "x^2+1", "1"]))
        assert err.value.failing == (2,)

    def test_unchecked_parameters(self):
        # without the containment check the arithmetic yields the
        # claimed numbers for the n = 8 triple; the precondition is
        # what fails, not the bookkeeping
        params = css_params(code(8, PLUS, ["x^2+1"] * 3), check=False)
        assert params.as_tuple() == (24, 12, 2)

    def test_logical_exponent_consistency(self):
        for n, sign, gens in [
            (6, PLUS, ["x^2+2"] * 3),
            (3, MINUS, ["x+1"] * 3),
            (12, MINUS, ["x^2+x+2", "2x^2+x+1", "x^2+2x+2"]),
        ]:
            c = code(n, sign, gens)
            params = css_params(c)
            assert params.K == c.cardinality_log3 - c.dual().cardinality_log3
            assert params.N == 3 * c.n
            assert params.d == c.lee_distance()

    def test_zero_component_has_no_distance(self):
        # a zero component never contains its dual, so the checked path
        # refuses before distance is ever consulted
        c = code(2, PLUS, ["1", "1", "x^2+2"])
        with pytest.raises(NotDualContaining):
            css_params(c)


class TestScan:
    def test_scan_includes_reference_rows(self):
        rows = scan_dual_containing(3, MINUS)
        triples = {(str(a), str(b), str(c)): p.as_tuple() for a, b, c, p in rows}
        assert triples[("x+1", "x+1", "x+1")] == (9, 3, 2)
        rows = scan_dual_containing(12, PLUS)
        triples = {(str(a), str(b), str(c)): p.as_tuple() for a, b, c, p in rows}
        key = ("x^3+x^2+x+1",) * 3
        assert triples[key] == (36, 18, 2)

    def test_trivial_length(self):
        rows = scan_dual_containing(1, PLUS)
        assert len(rows) == 1
        a, b, c, p = rows[0]
        assert (str(a), str(b), str(c)) == ("1", "1", "1")
        assert p.as_tuple() == (3, 3, 1)

    def test_sorted_and_deterministic(self):
        rows = scan_dual_containing(12, MINUS)
        keys = [(-p.K, -p.d, tuple(str(f) for f in (a, b, c)))
                for a, b, c, p in rows]
        assert keys == sorted(keys)
        assert rows == scan_dual_containing(12, MINUS)

    def test_unordered_triples_once(self):
        rows = scan_dual_containing(6, PLUS)
        seen = set()
        for a, b, c, _ in rows:
            key = frozenset([str(a), str(b), str(c)])
            multiset = tuple(sorted([str(a), str(b), str(c)]))
            assert multiset not in seen
            seen.add(multiset)

    def test_emitted_codes_really_contain_dual(self):
        # each emitted component passes the explicit subset check, which
        # must agree with the divisibility criterion
        for n, sign in [(4, PLUS), (6, PLUS), (6, MINUS)]:
            for a, b, c, params in scan_dual_containing(n, sign):
                for g in (a, b, c):
                    comp = TernaryPolyCode(n, sign, g)
                    assert comp.contains_dual()
                    assert comp.contains_dual_by_subset()
                assert params.K >= 0

    def test_scan_misses_nothing(self):
        # brute cross-check at n = 4: every divisor triple that passes
        # the componentwise subset check appears in the scan
        from itertools import combinations_with_replacement

        from ternring.poly import divisors_of_modulus

        rows = scan_dual_containing(4, PLUS)
        listed = {tuple(str(f) for f in row[:3]) for row in rows}
        divs = divisors_of_modulus(4, PLUS)
        for triple in combinations_with_replacement(divs, 3):
            ok = all(
                TernaryPolyCode(4, PLUS, g).contains_dual_by_subset()
                for g in triple
            )
            assert ok == (tuple(str(f) for f in triple) in listed)


class TestReferenceTable:
    def test_statuses(self):
        report = verify_reference_table()
        assert len(report) == 8
        assert [row.status for row in report] == ["ok"] * 7 + ["flag"]
        flagged = [row for row in report if row.status == "flag"]
        assert [row.flag_id for row in flagged] == list(EXPECTED_FLAGS)
        assert all(row.notes for row in flagged)

    def test_parameters_match(self):
        for row in verify_reference_table():
            if row.status == "ok":
                assert row.params.as_tuple() == row.expected

    def test_generators_normalized_monic(self):
        report = verify_reference_table()
        row = next(r for r in report if r.label == "[[36,24,2]]")
        assert row.generators == ("x^2+x+2", "x^2+2x+2", "x^2+2x+2")

    def test_flagged_row_detail(self):
        row = verify_reference_table()[-1]
        assert row.n == 8
        assert row.params is None
        assert "do not contain their dual" in row.notes[0]
