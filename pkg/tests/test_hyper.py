"""Series evaluators: exact, modular, the terminating identity, the omega build."""

from fractions import Fraction
from random import Random

import pytest

from supercon.arith import OMEGA, CycloElem, reduce_mod
from supercon.errors import (
    AlphaOutOfRange,
    NonUnitDenominator,
    PoleInRange,
    PrecisionExhausted,
)
from supercon.hyper import (
    GSParams,
    PfqSpec,
    alpha_window_residue,
    ff1_build,
    gs_lhs,
    gs_rhs,
    pfq_exact,
    pfq_mod,
    pochhammer,
)

F = Fraction


def test_pochhammer_values():
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(F(-3), 5) == 0
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(2, 4) == 2 * 3 * 4 * 5


def test_pochhammer_cyclo_matches_rational_embedding():
    x = F(2, 3)
    embedded = CycloElem(x, F(0))
    got = pochhammer(embedded, 4)
    assert got == CycloElem(pochhammer(x, 4), F(0))


def test_pfq_exact_known_sums():
    # the alternating 4F3 at p=5 truncation
    spec = PfqSpec((F(1, 2), F(1, 2), F(1, 2), F(5, 4)), (1, 1, F(1, 4)), -1, 2)
    assert pfq_exact(spec) == F(435, 512)
    # the central 4F3 at p=3 truncation
    spec = PfqSpec((F(1, 2),) * 4, (1, 1, 1), 1, 1)
    assert pfq_exact(spec) == F(17, 16)


def test_pfq_exact_n_zero_is_one():
    spec = PfqSpec((F(1, 3), F(2, 5)), (F(1, 7),), F(9, 4), 0)
    assert pfq_exact(spec) == 1


def test_pfq_exact_terminating_upper():
    # upper -2 kills every term past k=2 no matter how large n is
    spec = PfqSpec((F(-2), F(1, 2)), (F(1, 3),), 1, 50)
    expected = pfq_exact(PfqSpec((F(-2), F(1, 2)), (F(1, 3),), 1, 2))
    assert pfq_exact(spec) == expected


def test_pfq_dead_series_shields_later_pole():
    # the lower parameter hits zero at k=3, but the upper -2 has already
    # terminated the series by then, so no pole is reported
    spec = PfqSpec((F(-2), 1), (F(-3),), 1, 10)
    pfq_exact(spec)
    pfq_mod(spec, 7, 2)


def test_pfq_pole_in_live_range_raises():
    spec = PfqSpec((F(1, 2), 1), (F(-3),), 1, 10)
    with pytest.raises(PoleInRange):
        pfq_exact(spec)
    with pytest.raises(PoleInRange):
        pfq_mod(spec, 7, 2)


def test_pfq_mod_equals_reduced_exact_on_random_specs():
    """The two evaluation routes agree whenever the reduction is legal."""
    rng = Random(31337)
    p, k = 7, 3
    agreed = 0
    while agreed < 120:
        ln_up = rng.randint(1, 4)
        ln_lo = rng.randint(0, 3)
        denoms = [1, 2, 3, 4, 5, 6]
        upper = tuple(F(rng.randint(-8, 8), rng.choice(denoms)) for _ in range(ln_up))
        lower = tuple(F(rng.randint(-8, 8), rng.choice(denoms)) for _ in range(ln_lo))
        z = F(rng.randint(-4, 4), rng.choice(denoms))
        spec = PfqSpec(upper, lower, z, rng.randint(0, 8))
        try:
            exact = reduce_mod(pfq_exact(spec), p, k)
            fast = pfq_mod(spec, p, k).residue(k)
        except (PoleInRange, NonUnitDenominator, PrecisionExhausted):
            continue
        assert fast == exact, spec
        agreed += 1


def test_pfq_mod_rejects_cyclo_flavor():
    spec = PfqSpec((OMEGA, F(1, 2)), (F(1),), 1, 3)
    assert spec.is_cyclo
    with pytest.raises(TypeError):
        pfq_mod(spec, 5, 2)


def test_pfq_spec_promotes_flavor():
    spec = PfqSpec((OMEGA, F(1, 2)), (1,), F(1, 3), 2)
    assert all(isinstance(u, CycloElem) for u in spec.upper)
    assert isinstance(spec.z, CycloElem)
    plain = PfqSpec((F(1, 2), 3), (1,), 1, 2)
    assert not plain.is_cyclo
    assert all(isinstance(u, F) for u in plain.upper)


class TestGSIdentity:
    def test_pinned_case(self):
        g = GSParams(F(1, 4), F(1, 2), F(1, 4), 2)
        assert gs_lhs(g) == F(5, 4)
        assert gs_rhs(g) == F(5, 4)

    def test_n_zero_both_sides_one(self):
        g = GSParams(F(1, 3), F(1, 5), F(1, 7), 0)
        assert gs_lhs(g) == 1
        assert gs_rhs(g) == 1

    def test_odd_n_both_sides_zero(self):
        g = GSParams(F(1, 4), F(1, 2), F(1, 4), 3)
        assert gs_lhs(g) == 0
        assert gs_rhs(g) == 0

    def test_parameter_shapes(self):
        g = GSParams(F(1, 4), F(1, 2), F(1, 4), 2)
        assert len(g.upper) == 7
        assert len(g.lower) == 6
        assert g.series().n == 2
        assert g.upper[-1] == F(-2)  # the terminating parameter is -n

    def test_construction_screens_poles(self):
        # b = -1/2 puts 2b = -1 inside the pole window for n >= 2
        with pytest.raises(PoleInRange):
            GSParams(F(1, 4), F(-1, 2), F(1, 7), 4)

    def test_vanishing_numerator_factor(self):
        # (a+1)_r = 0 for a = -2, r = 2: the closed form collapses to zero
        # and the truncated sum must follow it there
        g = GSParams(F(-2), F(1, 3), F(1, 5), 4)
        assert gs_rhs(g) == 0
        assert gs_lhs(g) == 0

    def test_randomized_identity(self):
        rng = Random(777)
        checked = 0
        while checked < 150:
            a = F(rng.randint(-12, 12), rng.randint(1, 12))
            b = F(rng.randint(-12, 12), rng.randint(1, 12))
            d = F(rng.randint(-12, 12), rng.randint(1, 12))
            n = rng.randint(0, 10)
            try:
                g = GSParams(a, b, d, n)
                lhs, rhs = gs_lhs(g), gs_rhs(g)
            except PoleInRange:
                continue
            assert lhs == rhs, (a, b, d, n)
            checked += 1

    def test_cyclo_parameters_work_exactly(self):
        # the identity also runs inside Q(omega); spot-check an instance
        # whose d has an omega part, against the rational closed form route
        p = 5
        d = (CycloElem(F(1), F(0)) + OMEGA.conjugate() * p) * F(1, 4)
        g = GSParams(F(1, 4), F(1, 2), d, 2)
        assert gs_lhs(g) == gs_rhs(g)


def test_alpha_window():
    assert alpha_window_residue(F(0), 13) == 0
    assert alpha_window_residue(F(3), 13) == 3
    assert alpha_window_residue(F(1, 7), 13) == 2
    assert alpha_window_residue(F(6, 11), 5) == 1  # 11 = 1 mod 5, so this is 6 = 1
    with pytest.raises(AlphaOutOfRange):
        alpha_window_residue(F(4), 13)
    with pytest.raises(AlphaOutOfRange):
        alpha_window_residue(F(2, 3), 5)  # inverse of 3 is 2, so 2/3 = 4 > 1
    with pytest.raises(NonUnitDenominator):
        alpha_window_residue(F(1, 5), 5)


class TestFF1Build:
    def test_exact_equality_small_primes(self):
        for p in (5, 13):
            for alpha in range(p // 4 + 1):
                lhs, rhs = ff1_build(p, F(alpha))
                assert lhs == rhs, (p, alpha)

    def test_three_mod_four_gives_zero(self):
        lhs, rhs = ff1_build(7, F(1))
        assert rhs == CycloElem(F(0), F(0))
        assert lhs == rhs

    def test_rational_alpha(self):
        lhs, rhs = ff1_build(13, F(1, 7))  # residue 2, inside the window
        assert lhs == rhs

    def test_window_enforced(self):
        with pytest.raises(AlphaOutOfRange):
            ff1_build(5, F(2))

    def test_needs_admissible_prime(self):
        with pytest.raises(ValueError):
            ff1_build(4, F(0))
        with pytest.raises(ValueError):
            ff1_build(3, F(0))
