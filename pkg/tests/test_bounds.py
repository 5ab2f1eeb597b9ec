import itertools
from fractions import Fraction

import pytest

from insdel.bounds import (
    counterexample_code,
    distance_drop_threshold,
    exact_iq,
    field_size_threshold,
    levenshtein_lower_bound,
    project_code,
    singleton_bound,
    size_upper_bound,
    verify_support_structure,
)
from insdel.errors import DomainError, ScaleCapExceeded
from insdel.gf import field_make
from insdel.rs import RsCode, rs_encode
from insdel.gf import Polynomial
from insdel.words import Code, Word, all_words, code_min_distance


class TestSingleton:
    def test_examples(self):
        assert singleton_bound(2, 3, 2) == 8
        assert singleton_bound(2, 3, 6) == 2
        assert singleton_bound(2, 3, 4) == 4

    def test_rejects_odd_distance(self):
        with pytest.raises(DomainError):
            singleton_bound(2, 3, 3)


class TestSizeUpperBound:
    def test_exact_endpoints(self):
        assert size_upper_bound(2, 3, 2) == (8, "i")
        assert size_upper_bound(3, 3, 6) == (3, "i")

    def test_tightest_clause_wins(self):
        # Both middle clauses apply; the power clause is smaller.
        assert size_upper_bound(2, 3, 4) == (2, "iii")
        assert size_upper_bound(2, 4, 6) == (2, "iii")

    def test_halved_clause_when_power_not_applicable(self):
        # 2q = 6 > d = 4, so only the averaged clause fires.
        assert size_upper_bound(3, 4, 4) == ((3**3 + 3**2) // 2, "ii")

    def test_never_exceeds_singleton(self):
        for q in (2, 3):
            for n in range(2, 6):
                for d in range(2, 2 * n + 1, 2):
                    value, clause = size_upper_bound(q, n, d)
                    assert value <= singleton_bound(q, n, d)


class TestLevenshteinLower:
    def test_example(self):
        assert levenshtein_lower_bound(2, 3, 2) == 1

    def test_exact_rational(self):
        got = levenshtein_lower_bound(2, 3, 4)
        assert got == Fraction(2**5, 7**2)

    def test_rejects_overlong_distance(self):
        with pytest.raises(DomainError):
            levenshtein_lower_bound(2, 3, 8)


class TestDistanceDropThreshold:
    def test_reference_case(self):
        result = distance_drop_threshold(3, 20, 2, 2)
        assert result["bound_applies"] is True
        assert result["d_max"] == 34
        assert result["rhs"] == 17
        assert result["branch"] == "low-rate"
        assert result["h"] == 3

    def test_violated_inequality(self):
        result = distance_drop_threshold(101, 20, 2, 2)
        assert result["bound_applies"] is False
        assert result["d_max"] is None

    def test_boundary_takes_larger_rhs(self):
        # n = 3k - 1 puts k exactly on the case boundary.
        k, n = 3, 8
        both = distance_drop_threshold(2, n, k, 2)
        import math

        assert both["rhs"] == max(
            math.comb((n + k + 4) // 2, k - 1), math.comb(n - k - 1, k - 1)
        )

    def test_rejects_delta_one(self):
        with pytest.raises(DomainError):
            distance_drop_threshold(3, 10, 2, 1)


class TestFieldSizeThreshold:
    def test_low_rate_example(self):
        assert field_size_threshold(10, 2, 2) == Fraction(7, 2)

    def test_high_rate_branch(self):
        assert field_size_threshold(10, 5, 2) == Fraction(2 ** ((10 + 5 + 4) // 2))

    def test_monotone_in_delta(self):
        for n, k in [(20, 3), (30, 4), (16, 2)]:
            values = [field_size_threshold(n, k, d) for d in range(2, 6)]
            if values[0] > 1:
                assert all(a >= b for a, b in zip(values, values[1:]))

    def test_threshold_implies_inequality(self):
        # Field sizes at or below the threshold satisfy the case-split
        # inequality of the distance-drop certificate.
        for n, k, delta in [(20, 3, 2), (20, 3, 3), (30, 4, 2)]:
            threshold = field_size_threshold(n, k, delta)
            q = int(threshold)
            if q >= 2:
                assert distance_drop_threshold(q, n, k, delta)["bound_applies"]


class TestExactIq:
    def test_endpoint_equalities(self):
        assert exact_iq(2, 3, 2)[0] == 8
        assert exact_iq(2, 3, 6)[0] == 2
        assert exact_iq(3, 3, 6)[0] == 3

    def test_witness_is_valid_code(self):
        size, code = exact_iq(2, 3, 4)
        assert size == len(code)
        assert 2 <= size <= 3
        if size >= 2:
            d, _ = code_min_distance(code, "INSDEL")
            assert d >= 4

    def test_vertex_cap(self):
        with pytest.raises(ScaleCapExceeded):
            exact_iq(2, 13, 4)

    def test_never_beats_upper_bounds(self):
        for q in (2, 3):
            for n in (3, 4):
                for d in range(2, 2 * n + 1, 2):
                    size, _ = exact_iq(q, n, d)
                    assert size <= size_upper_bound(q, n, d)[0]

    def test_strictly_below_singleton_midrange(self):
        for q in (2, 3):
            for n in (3, 4):
                for d in range(4, 2 * n - 1, 2):
                    size, _ = exact_iq(q, n, d)
                    assert size < singleton_bound(q, n, d)

    def test_near_max_distance_caps(self):
        # At d = 2n-2 a binary code has at most (q^2+q)/2 = 3 members,
        # and at most q = 2 once n >= q + 1.
        for n in (3, 4):
            size, _ = exact_iq(2, n, 2 * n - 2)
            assert size <= 2

    def test_deterministic_witness(self):
        assert exact_iq(2, 3, 4)[1].members == exact_iq(2, 3, 4)[1].members


def rs_code_as_words(q, n, k):
    ctx = field_make(q)
    rs = RsCode(ctx, tuple(range(n)), k)
    members = []
    for coeffs in itertools.product(range(q), repeat=k):
        members.append(Word(q, rs_encode(rs, Polynomial(ctx, coeffs))))
    return Code(q, n, tuple(set(members)))


class TestProjection:
    def test_identity_projection(self):
        code = Code(2, 2, tuple(all_words(2, 2)))
        assert project_code(code, range(2)).members == code.members

    def test_cube_projects_to_cube(self):
        code = Code(2, 3, tuple(all_words(2, 3)))
        assert set(project_code(code, (0, 1)).members) == set(all_words(2, 2))

    def test_mds_projection_is_full_cube(self):
        code = rs_code_as_words(5, 4, 2)
        for positions in itertools.combinations(range(4), 2):
            projected = project_code(code, positions)
            assert len(projected) == 25

    def test_invalid_positions(self):
        code = Code(2, 2, tuple(all_words(2, 2)))
        with pytest.raises(DomainError):
            project_code(code, (0, 5))


class TestSupportStructure:
    def test_rs_codes_have_uniform_supports(self):
        for n in (3, 4):
            code = rs_code_as_words(5, n, 2)
            ok, counts = verify_support_structure(code, 2)
            assert ok
            assert set(counts.values()) == {4}
            assert len(counts) == len(list(itertools.combinations(range(n), n - 1)))

    def test_rejects_non_optimal_code(self):
        # Size q^1 but Hamming distance 2 < n - k + 1 = 3.
        code = Code(2, 3, (Word(2, (0, 0, 0)), Word(2, (1, 1, 0))))
        with pytest.raises(DomainError):
            verify_support_structure(code, 1)
        # Wrong size for the claimed dimension.
        with pytest.raises(DomainError):
            verify_support_structure(
                Code(2, 3, (Word(2, (0, 0, 0)), Word(2, (1, 1, 1)))), 2
            )

    def test_requires_zero_word(self):
        code = rs_code_as_words(5, 3, 2)
        # Permuting the symbols at one position preserves Hamming
        # distances but removes the zero word.
        shifted = Code(
            5,
            3,
            tuple(
                Word(5, ((w.symbols[0] + 1) % 5,) + w.symbols[1:])
                for w in code.members
            ),
        )
        with pytest.raises(DomainError):
            verify_support_structure(shifted, 2)


class TestCounterexample:
    def test_reference_cases(self):
        code, report = counterexample_code(5, 4)
        assert report["size"] == 6
        assert report["min_insdel"] == 6
        assert report["size"] > report["power_bound"]
        code, report = counterexample_code(3, 3)
        assert report["size"] == 4
        assert report["min_insdel"] == 4

    def test_rainbow_uses_each_symbol_once(self):
        code, _ = counterexample_code(4, 4)
        rainbow = code.members[-1]
        assert sorted(rainbow.symbols) == list(range(4))

    def test_rejects_long_words(self):
        with pytest.raises(DomainError):
            counterexample_code(3, 4)
