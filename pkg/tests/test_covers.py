import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a3check.covers import (
    MultiplicityPair,
    RamificationProfile,
    Verdict,
    criterion_not_jacobian,
    enumerate_profiles,
    hurwitz_genus,
    lefschetz_identity_check,
    lefschetz_sides,
    lefschetz_solve,
    profile_admissible,
    screen,
    tau_norm,
    trace_from_multiplicities,
)
from a3check.errors import DomainError, NegativeMultiplicity, NonIntegral
from a3check.exactcore import EisensteinNumber

W = cmath.exp(2j * cmath.pi / 3)


def brute_force_solve(h1, h2):
    """All (a, b) with a + b <= h that satisfy the identity, found by search."""
    p = RamificationProfile(h1, h2)
    return [
        (a, b)
        for a in range(h1 + h2 + 1)
        for b in range(h1 + h2 + 1)
        if lefschetz_identity_check(p, MultiplicityPair(a, b))
    ]


def complex_sides(h1, h2, a, b):
    tau = a * W + b * W.conjugate()
    return 1 - tau.conjugate(), h1 / (1 - W) + h2 / (1 - W**2)


@pytest.mark.parametrize("h,g", [(7, 5), (4, 2), (5, 3), (100, 98)])
def test_hurwitz_genus(h, g):
    assert hurwitz_genus(h) == g
    assert 2 * g - 2 == 3 * (-2) + 2 * h


@pytest.mark.parametrize("h", [3, 0, -1])
def test_hurwitz_genus_rejects_small(h):
    with pytest.raises(DomainError, match="g > 1"):
        hurwitz_genus(h)


@pytest.mark.parametrize(
    "a,b,expected",
    [(2, 1, EisensteinNumber(-1, 1)), (0, 0, EisensteinNumber(0)), (1, 1, EisensteinNumber(-1)),
     (4, 1, EisensteinNumber(-1, 3))],
)
def test_trace(a, b, expected):
    tau = trace_from_multiplicities(MultiplicityPair(a, b))
    assert tau == expected
    assert complex(float(tau.u) + float(tau.v) * W) == pytest.approx(a * W + b * W**2)


@pytest.mark.parametrize("a,b,expected", [(4, 1, 19), (2, 1, 7), (0, 0, 1)])
def test_tau_norm(a, b, expected):
    assert tau_norm(MultiplicityPair(a, b)) == expected
    lhs, _ = complex_sides(0, 0, a, b)
    assert abs(lhs) ** 2 == pytest.approx(expected)


def test_tau_norm_routes_agree_grid():
    for a in range(60):
        for b in range(60):
            assert tau_norm(MultiplicityPair(a, b)) == Fraction((a + b + 2) ** 2 + 3 * (a - b) ** 2, 4)


@pytest.mark.parametrize("h1,h2,expected", [(4, 1, (2, 1)), (2, 2, (1, 1)), (6, 0, (3, 1)), (1, 4, (1, 2))])
def test_lefschetz_solve(h1, h2, expected):
    assert lefschetz_solve(RamificationProfile(h1, h2)) == MultiplicityPair(*expected)
    assert brute_force_solve(h1, h2) == [expected]


def test_lefschetz_solve_4_1_sides():
    lhs, rhs = lefschetz_sides(RamificationProfile(4, 1), MultiplicityPair(2, 1))
    assert lhs == rhs == EisensteinNumber(3, 1)


def test_lefschetz_solve_errors():
    with pytest.raises(NonIntegral):
        lefschetz_solve(RamificationProfile(5, 0))
    with pytest.raises(DomainError):
        lefschetz_solve(RamificationProfile(3, 0))
    assert brute_force_solve(5, 0) == []


def test_negative_counts_rejected():
    with pytest.raises(DomainError):
        RamificationProfile(-1, 3)
    with pytest.raises(NegativeMultiplicity):
        MultiplicityPair(2, -1)


@pytest.mark.parametrize("h1,h2,ok", [(4, 1, True), (2, 2, True), (3, 0, False), (5, 0, False), (6, 0, True)])
def test_profile_admissible(h1, h2, ok):
    assert profile_admissible(RamificationProfile(h1, h2)) is ok


@pytest.mark.parametrize(
    "a,b,verdict",
    [(4, 1, Verdict.NOT_JACOBIAN), (2, 1, Verdict.INCONCLUSIVE), (3, 1, Verdict.INCONCLUSIVE),
     (1, 4, Verdict.NOT_JACOBIAN), (5, 0, Verdict.NOT_JACOBIAN), (1, 1, Verdict.INCONCLUSIVE)],
)
def test_criterion(a, b, verdict):
    assert criterion_not_jacobian(MultiplicityPair(a, b)) is verdict


@pytest.mark.parametrize("a,b", [(1, 0), (0, 0), (0, 1)])
def test_criterion_requires_g_above_one(a, b):
    with pytest.raises(DomainError):
        criterion_not_jacobian(MultiplicityPair(a, b))


def test_identity_check_examples():
    assert lefschetz_identity_check(RamificationProfile(4, 1), MultiplicityPair(2, 1))
    # exact evaluation gives 4 + 2*zeta on both sides here
    lhs, rhs = lefschetz_sides(RamificationProfile(6, 0), MultiplicityPair(3, 1))
    assert lhs == rhs == EisensteinNumber(4, 2)
    assert not lefschetz_identity_check(RamificationProfile(4, 1), MultiplicityPair(1, 2))


def test_identity_check_agrees_with_complex_evaluation():
    for h1 in range(8):
        for h2 in range(8):
            for a in range(8):
                for b in range(8):
                    lhs, rhs = complex_sides(h1, h2, a, b)
                    exact = lefschetz_identity_check(RamificationProfile(h1, h2), MultiplicityPair(a, b))
                    assert exact == (abs(lhs - rhs) < 1e-9)


def test_screen_report_fields():
    rep = screen(MultiplicityPair(4, 1))
    assert (rep.g, rep.a, rep.b) == (5, 4, 1)
    assert rep.norm_one_minus_tau_conj == 19
    assert rep.bound_rhs == Fraction(49, 3)
    assert rep.verdict is Verdict.NOT_JACOBIAN
    assert rep.implied_profile() == (8, -1)
    assert not rep.boundary
    assert screen(MultiplicityPair(3, 1)).boundary


def test_enumerate_small():
    r2 = enumerate_profiles(2)
    assert (r2.profiles, r2.violations, r2.boundary) == (1, [], [])
    r3 = enumerate_profiles(3)
    assert r3.profiles == 3 and r3.ok
    with pytest.raises(DomainError):
        enumerate_profiles(1)


def test_enumerate_matches_naive_listing():
    for g_max in range(2, 25):
        naive = [
            (h1, h - h1)
            for h in range(4, g_max + 3)
            for h1 in range(h + 1)
            if profile_admissible(RamificationProfile(h1, h - h1))
        ]
        rep = enumerate_profiles(g_max)
        assert rep.profiles == len(naive)
        eq = [p for p in naive if (sum(p)) ** 2 == 9 * (lefschetz_solve(RamificationProfile(*p)).a
                                                        - lefschetz_solve(RamificationProfile(*p)).b) ** 2]
        assert sorted(rep.boundary) == sorted(eq)


def test_enumerate_200():
    rep = enumerate_profiles(200)
    assert rep.ok
    assert rep.boundary and rep.boundary_has_zero_count()
    # every profile with a zero count and h divisible by 3 attains equality
    expected = {(h, 0) for h in range(6, 203, 3)} | {(0, h) for h in range(6, 203, 3)}
    assert set(rep.boundary) == expected


profiles = st.tuples(st.integers(0, 300), st.integers(0, 300)).filter(
    lambda p: (p[0] - p[1]) % 3 == 0 and sum(p) >= 4
)


@given(profiles)
def test_hurwitz_lefschetz_coherence(p):
    prof = RamificationProfile(*p)
    m = lefschetz_solve(prof)
    assert m.g == hurwitz_genus(prof.h)
    assert lefschetz_identity_check(prof, m)
    assert lefschetz_solve(prof.swapped()) == m.swapped()
    assert criterion_not_jacobian(m) is Verdict.INCONCLUSIVE


@given(st.integers(0, 500), st.integers(0, 500))
def test_criterion_symmetric(a, b):
    if a + b > 1:
        m = MultiplicityPair(a, b)
        assert criterion_not_jacobian(m) is criterion_not_jacobian(m.swapped())
        rep = screen(m)
        h1, h2 = rep.implied_profile()
        assert (min(h1, h2) < 0) == (rep.verdict is Verdict.NOT_JACOBIAN)
