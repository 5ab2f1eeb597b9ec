import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from insdel.cw_l1 import (
    L1ConstructionSpec,
    construct_l1,
    pi_map,
    smallest_construction_prime,
    verify_l1_code,
)
from insdel.errors import DomainError, ScaleCapExceeded
from insdel.words import CWL1, Code, Composition, compositions_colex, l1_distance


class TestConstructionPrime:
    def test_examples(self):
        assert smallest_construction_prime(2) == 3
        assert smallest_construction_prime(4) == 5
        assert smallest_construction_prime(6) == 7

    @given(st.integers(2, 200))
    @settings(max_examples=50, deadline=None)
    def test_in_window(self, q):
        r = smallest_construction_prime(q)
        assert q + 1 <= r <= 2 * (q + 1)


class TestSpecValidation:
    def test_defaults(self):
        spec = L1ConstructionSpec(q=2, n=3, delta=2)
        assert spec.r == 3
        assert spec.alpha == 0
        assert spec.alphas == (1, 2)

    def test_rejects_bad_parameters(self):
        with pytest.raises(DomainError):
            L1ConstructionSpec(q=1, n=3, delta=2)
        with pytest.raises(DomainError):
            L1ConstructionSpec(q=2, n=1, delta=2)
        with pytest.raises(DomainError):
            L1ConstructionSpec(q=2, n=3, delta=2, r=4)
        with pytest.raises(DomainError):
            L1ConstructionSpec(q=2, n=3, delta=2, r=2)

    def test_alpha_must_avoid_bucket_points(self):
        with pytest.raises(DomainError):
            L1ConstructionSpec(q=2, n=3, delta=2, alphas=(0, 1))

    def test_guaranteed_lower_bound(self):
        assert L1ConstructionSpec(q=2, n=3, delta=2).guaranteed_lower_bound() == 2
        # C(11,8)/(5^0*4) = 165/4 rounded up.
        assert L1ConstructionSpec(q=4, n=8, delta=2, r=5).guaranteed_lower_bound() == 42


class TestPiMap:
    def test_multiplicative_in_counts(self):
        spec = L1ConstructionSpec(q=3, n=4, delta=3)
        a = Composition(3, (2, 1, 1))
        b = Composition(3, (0, 3, 1))
        ra, rb = pi_map(a, spec), pi_map(b, spec)
        combined = pi_map(Composition(3, (2, 4, 2)), _respec(spec, 8))
        assert (ra * rb).coeffs == combined.coeffs

    def test_rejects_mismatched_composition(self):
        spec = L1ConstructionSpec(q=2, n=3, delta=2)
        with pytest.raises(DomainError):
            pi_map(Composition(2, (1, 1)), spec)


def _respec(spec, n):
    return L1ConstructionSpec(
        q=spec.q, n=n, delta=spec.delta, r=spec.r, alpha=spec.alpha, alphas=spec.alphas
    )


class TestConstruction:
    def test_small_example(self):
        code, report = construct_l1(L1ConstructionSpec(q=2, n=3, delta=2))
        assert report == {
            "q": 2,
            "n": 3,
            "delta": 2,
            "r": 3,
            "bucket_unit": 1,
            "size": 2,
            "guaranteed_lower_bound": 2,
            "verified_min_l1": 4,
        }
        assert set(code.members) == {Composition(2, (2, 1)), Composition(2, (0, 3))}

    def test_size_meets_guarantee_and_distance(self):
        for q, n, delta in [(2, 4, 2), (3, 5, 2), (3, 6, 3), (4, 8, 2)]:
            spec = L1ConstructionSpec(q=q, n=n, delta=delta)
            code, report = construct_l1(spec)
            assert report["size"] >= report["guaranteed_lower_bound"]
            if report["verified_min_l1"] is not None:
                assert report["verified_min_l1"] >= 2 * delta
            ok, witness = verify_l1_code(code, delta)
            assert ok, witness

    def test_buckets_partition_the_space(self):
        spec = L1ConstructionSpec(q=3, n=4, delta=2)
        total = math.comb(4 + 3 - 1, 4)
        rctx = spec.residue_ctx()
        codes = {}
        for comp in compositions_colex(4, 3):
            codes.setdefault(pi_map(comp, spec).code, []).append(comp)
        assert sum(len(v) for v in codes.values()) == total

    def test_same_bucket_implies_distance(self):
        spec = L1ConstructionSpec(q=3, n=5, delta=2)
        buckets = {}
        for comp in compositions_colex(5, 3):
            buckets.setdefault(pi_map(comp, spec).code, []).append(comp)
        for members in buckets.values():
            for a, b in itertools.combinations(members, 2):
                assert l1_distance(a, b) >= 2 * spec.delta

    def test_enumeration_cap(self):
        with pytest.raises(ScaleCapExceeded):
            construct_l1(L1ConstructionSpec(q=12, n=40, delta=2))

    def test_deterministic(self):
        spec = L1ConstructionSpec(q=3, n=5, delta=2)
        first, r1 = construct_l1(spec)
        second, r2 = construct_l1(spec)
        assert first.members == second.members
        assert r1 == r2


class TestExpertModulus:
    def test_irreducible_modulus_path(self):
        # x^2 + 1 is irreducible over F_3; permits r = q = 3.
        spec = L1ConstructionSpec(
            q=3, n=5, delta=3, r=3, alphas=(0, 1, 2), irreducible_modulus=(1, 0, 1)
        )
        assert spec.unit_count() == 3**2 - 1
        code, report = construct_l1(spec)
        assert report["size"] >= spec.guaranteed_lower_bound()
        ok, witness = verify_l1_code(code, 3)
        assert ok, witness

    def test_reducible_modulus_rejected(self):
        with pytest.raises(DomainError):
            L1ConstructionSpec(
                q=3, n=5, delta=3, r=3, alphas=(0, 1, 2), irreducible_modulus=(0, 0, 1)
            )

    def test_needs_delta_three(self):
        with pytest.raises(DomainError):
            L1ConstructionSpec(
                q=3, n=5, delta=2, r=3, alphas=(0, 1, 2), irreducible_modulus=(1, 1)
            )


class TestVerifier:
    def test_flags_violation(self):
        code = Code(
            2, 3, (Composition(2, (0, 3)), Composition(2, (1, 2))), kind=CWL1
        )
        ok, witness = verify_l1_code(code, 2)
        assert not ok
        assert witness == (Composition(2, (0, 3)), Composition(2, (1, 2)))

    def test_singleton_passes(self):
        code = Code(2, 3, (Composition(2, (0, 3)),), kind=CWL1)
        assert verify_l1_code(code, 5) == (True, None)
