import random

import pytest

from cmworkbench.gf import Fp2
from cmworkbench.jacobian import (
    IDENTITY,
    CurveError,
    CurveParams,
    InvalidDivisorError,
    MumfordDivisor,
    cantor_add,
    curve_validate,
    endomorphism_apply,
    scalar_mul,
)
from cmworkbench.rings import FIFTH_ROOT, GAUSSIAN, SIXTH_ROOT, ZETA5, I, RingKind, norm

from .oracles import brute_force_points, principal_sextuple, sum_by_interpolation, support

GAUSSIAN_PRIMES = [5, 13, 17, 29, 37, 41]
FIFTH_PRIMES = [11, 31]


def _pairs(jac, n, seed):
    rng = random.Random(seed)
    return list(zip(jac.sample(rng, n), jac.sample(rng, n)))


class TestValidate:
    def test_gaussian_example(self):
        params = CurveParams(13, (0, 12, 0, 0, 0, 1), 12, 5, RingKind.GAUSSIAN)
        assert curve_validate(params).order == 144

    def test_fifth_root_example(self):
        params = CurveParams(11, (10, 0, 0, 0, 0, 1), 3, 1, RingKind.FIFTH_ROOT)
        assert curve_validate(params).order == 176

    def test_not_squarefree(self):
        f = (0, 1, 0, 11, 0, 1)  # x^5 - 2x^3 + x = x (x^2 - 1)^2
        with pytest.raises(CurveError, match="squarefree"):
            curve_validate(CurveParams(13, f, 12, 5, RingKind.GAUSSIAN))

    def test_automorphism_mismatch(self):
        with pytest.raises(CurveError, match="automorphism"):
            curve_validate(CurveParams(13, (0, 12, 0, 0, 0, 1), 12, 1, RingKind.GAUSSIAN))

    def test_bad_congruence(self):
        with pytest.raises(CurveError):
            CurveParams.gaussian(7)
        with pytest.raises(CurveError):
            CurveParams.fifth_root(13)
        with pytest.raises(CurveError, match="prime"):
            curve_validate(CurveParams(15, (0, 14, 0, 0, 0, 1), 14, 2, RingKind.GAUSSIAN))

    def test_no_model_for_sixth_root(self):
        with pytest.raises(CurveError):
            curve_validate(CurveParams(13, (0, 12, 0, 0, 0, 1), 12, 5, RingKind.SIXTH_ROOT))

    def test_detect(self):
        assert CurveParams.detect((0, -1, 0, 0, 0, 1), 13).cm is RingKind.GAUSSIAN
        assert CurveParams.detect((-1, 0, 0, 0, 0, 1), 11).cm is RingKind.FIFTH_ROOT
        with pytest.raises(CurveError):
            CurveParams.detect((1, 1, 0, 0, 0, 1), 13)
        with pytest.raises(CurveError):
            CurveParams.detect((0, -1, 0, 0, 0, 1), 4)


class TestEnumeration:
    def test_matches_brute_force(self, gauss13):
        assert set(gauss13.points) == brute_force_points(gauss13)
        assert len(gauss13.points) == len(set(gauss13.points))

    def test_identity_and_validity(self, gauss13, fifth11):
        for jac in (gauss13, fifth11):
            assert IDENTITY in jac.points
            assert all(jac.is_valid(P) for P in jac.points)

    @pytest.mark.parametrize("prime", [5, 13, 17, 29])
    def test_dual_method_gaussian(self, prime):
        jac = curve_validate(CurveParams.gaussian(prime))
        assert len(jac.enumerate_points()) == jac.order_via_counts()

    @pytest.mark.parametrize("prime", FIFTH_PRIMES)
    def test_dual_method_fifth_root(self, prime):
        jac = curve_validate(CurveParams.fifth_root(prime))
        assert len(jac.enumerate_points()) == jac.order_via_counts()

    def test_enumeration_bound(self):
        with pytest.raises(CurveError, match="bound"):
            curve_validate(CurveParams.gaussian(53)).enumerate_points()
        # counting still works above the enumeration bound
        assert curve_validate(CurveParams.gaussian(53)).order_via_counts() > 0

    def test_counting_bound(self):
        with pytest.raises(CurveError, match="bound"):
            curve_validate(CurveParams.gaussian(1009)).order_via_counts()

    @pytest.mark.parametrize("fixture", ["gauss13", "fifth11"])
    def test_lagrange(self, fixture, request):
        jac = request.getfixturevalue(fixture)
        for P in jac.sample(random.Random(7), 20):
            assert scalar_mul(jac.order, P, jac) == IDENTITY


class TestGroupLaw:
    def test_frozen_sum(self, gauss13):
        P = MumfordDivisor((0, 1, 1), ())
        Q = MumfordDivisor((7, 5, 1), (4, 9))
        R = MumfordDivisor((2, 6, 1), (12, 7))
        assert cantor_add(P, Q, gauss13) == R
        assert sum_by_interpolation(gauss13, P, Q) == [R]

    def test_agrees_with_interpolation_oracle(self, gauss13):
        rng = random.Random(3)
        full = [P for P in gauss13.points if len(P.u) == 3]
        checked = 0
        for _ in range(400):
            P, Q = rng.choice(full), rng.choice(full)
            S = gauss13.add(P, Q)
            if len(S.u) != 3:
                continue
            cands = sum_by_interpolation(gauss13, P, Q)
            if not cands:
                continue
            assert cands == [S]
            checked += 1
            if checked >= 25:
                break
        assert checked >= 20

    def test_interpolation_detects_wrong_sum(self, gauss13):
        field = Fp2.make(13)
        P = MumfordDivisor((0, 1, 1), ())
        Q = MumfordDivisor((7, 5, 1), (4, 9))
        wrong = MumfordDivisor((2, 6, 1), (1, 6))  # negation of the true sum
        pts = support(field, P) + support(field, Q) + support(field, wrong, negate=True)
        assert not principal_sextuple(field, pts)

    def test_identity_and_inverse(self, gauss13):
        for P in gauss13.points:
            assert cantor_add(P, IDENTITY, gauss13) == P
            assert cantor_add(P, gauss13.negate(P), gauss13) == IDENTITY

    def test_scalar_small(self, gauss13):
        for P in gauss13.points[:30]:
            assert scalar_mul(0, P, gauss13) == IDENTITY
            assert scalar_mul(1, P, gauss13) == P
            assert scalar_mul(-1, P, gauss13) == gauss13.negate(P)
            assert scalar_mul(3, P, gauss13) == gauss13.add(P, gauss13.add(P, P))

    def test_order_annihilates_everything(self, gauss13):
        for P in gauss13.points:
            assert scalar_mul(gauss13.order, P, gauss13) == IDENTITY

    def test_commutative_exhaustive(self, gauss13):
        pts = gauss13.points
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                assert gauss13.add(pts[a], pts[b]) == gauss13.add(pts[b], pts[a])

    def test_associative(self, gauss13):
        rng = random.Random(11)
        for P, Q, R in zip(*(gauss13.sample(rng, 1000) for _ in range(3))):
            add = gauss13.add
            assert add(add(P, Q), R) == add(P, add(Q, R))

    def test_closed(self, fifth11):
        pts = set(fifth11.points)
        for P, Q in _pairs(fifth11, 200, 5):
            assert fifth11.add(P, Q) in pts

    def test_point_order_divides_group_order(self, gauss13, fifth11):
        for jac in (gauss13, fifth11):
            for P in jac.points:
                n = jac.point_order(P)
                assert jac.order % n == 0
                assert scalar_mul(n, P, jac) == IDENTITY

    def test_invalid_divisor(self, gauss13):
        bad = MumfordDivisor((1, 0, 1), (1,))
        assert not gauss13.is_valid(bad)
        with pytest.raises(InvalidDivisorError):
            gauss13.add(bad, IDENTITY)
        with pytest.raises(InvalidDivisorError):
            scalar_mul(2, bad, gauss13)
        with pytest.raises(InvalidDivisorError):
            gauss13.make((1, 2, 3), ())  # not monic


class TestEndomorphisms:
    def test_automorphism_of_identity(self, gauss13, fifth11):
        assert gauss13.automorphism_apply(IDENTITY) == IDENTITY
        assert fifth11.automorphism_apply(IDENTITY) == IDENTITY

    def test_i_squared_is_negation(self, gauss13):
        for P in gauss13.points:
            assert gauss13.automorphism_apply(gauss13.automorphism_apply(P)) == gauss13.negate(P)

    def test_zeta_fifth_power_is_identity(self, fifth11):
        for P in fifth11.points:
            Q = P
            for _ in range(5):
                Q = fifth11.automorphism_apply(Q)
            assert Q == P

    def test_zero_and_additivity(self, gauss13):
        for P in gauss13.points[:40]:
            assert endomorphism_apply(GAUSSIAN.zero, P, gauss13) == IDENTITY
            lhs = gauss13.add(endomorphism_apply(2 + I, P, gauss13), endomorphism_apply(2 - I, P, gauss13))
            assert lhs == scalar_mul(4, P, gauss13)

    def test_product_is_five(self, gauss13):
        for P in gauss13.points:
            assert endomorphism_apply(2 + I, endomorphism_apply(2 - I, P, gauss13), gauss13) == scalar_mul(
                5, P, gauss13
            )

    def test_ring_mismatch(self, gauss13):
        with pytest.raises(CurveError):
            endomorphism_apply(ZETA5, IDENTITY, gauss13)
        with pytest.raises(CurveError):
            endomorphism_apply(SIXTH_ROOT.one, IDENTITY, gauss13)

    @pytest.mark.parametrize("fixture", ["gauss13", "fifth11"])
    def test_automorphism_is_homomorphism(self, fixture, request):
        jac = request.getfixturevalue(fixture)
        for P, Q in _pairs(jac, 500, 17):
            assert jac.automorphism_apply(jac.add(P, Q)) == jac.add(
                jac.automorphism_apply(P), jac.automorphism_apply(Q)
            )

    @pytest.mark.parametrize("fixture", ["gauss13", "fifth11"])
    def test_ring_action_law(self, fixture, request):
        jac = request.getfixturevalue(fixture)
        ring = GAUSSIAN if jac.params.cm is RingKind.GAUSSIAN else FIFTH_ROOT
        rng = random.Random(23)
        for _ in range(60):
            a = ring.element([rng.randint(-4, 4) for _ in range(ring.degree)])
            b = ring.element([rng.randint(-4, 4) for _ in range(ring.degree)])
            P = jac.sample(rng, 1)[0]
            ea = jac.endomorphism_apply
            assert ea(a * b, P) == ea(a, ea(b, P))
            assert ea(a + b, P) == jac.add(ea(a, P), ea(b, P))


class TestKernels:
    def test_unit_kernel(self, gauss13, fifth11):
        assert gauss13.kernel_count(GAUSSIAN.one) == 1
        assert fifth11.kernel_count(FIFTH_ROOT.one) == 1

    def test_kernel_of_two_plus_i(self, gauss13):
        assert 25 % gauss13.kernel_count(2 + I) == 0

    def test_full_rational_kernel_of_one_plus_i(self):
        jac = curve_validate(CurveParams.gaussian(5))
        assert jac.kernel_count(1 + I) == 4

    @pytest.mark.parametrize("prime", GAUSSIAN_PRIMES)
    def test_kernel_divides_degree_gaussian(self, prime):
        jac = curve_validate(CurveParams.gaussian(prime))
        for a in (GAUSSIAN.one, 1 + I, 2 + I, 2 - I, GAUSSIAN.integer(2)):
            assert norm(a) ** 2 % jac.kernel_count(a) == 0

    @pytest.mark.parametrize("prime", FIFTH_PRIMES)
    def test_kernel_divides_degree_fifth_root(self, prime):
        jac = curve_validate(CurveParams.fifth_root(prime))
        for a in (FIFTH_ROOT.one, 1 + ZETA5, 1 - ZETA5, FIFTH_ROOT.integer(2)):
            assert norm(a) % jac.kernel_count(a) == 0


class TestOrbits:
    def test_identity_maps(self, gauss13):
        P, Q = gauss13.points[5], gauss13.points[40]
        assert gauss13.find_orbit_cycle(GAUSSIAN.one, GAUSSIAN.one, P, Q) == (0, 1)

    def test_i_period_divides_four(self, gauss13):
        for P in gauss13.points[:30]:
            m, k = gauss13.find_orbit_cycle(I, I, P, P)
            assert m == 0 and 4 % k == 0

    def test_two_plus_i_orbit_is_finite(self, gauss13):
        P, Q = gauss13.sample(random.Random(0), 2)
        m, k = gauss13.find_orbit_cycle(2 + I, 2 - I, P, Q)
        assert m >= 0 and k > 0
        X, Y = P, Q
        for _ in range(m):
            X, Y = endomorphism_apply(2 + I, X, gauss13), endomorphism_apply(2 - I, Y, gauss13)
        start = (X, Y)
        for _ in range(k):
            X, Y = endomorphism_apply(2 + I, X, gauss13), endomorphism_apply(2 - I, Y, gauss13)
        assert (X, Y) == start
