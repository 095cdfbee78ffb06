"""Fixed-point data of an order-3 automorphism of a curve and the non-Jacobian test.

Setting: ``phi`` is an automorphism of order 3 of a genus ``g > 1`` curve
``C`` whose quotient is the projective line. Every fixed point ``P`` has a
rotation number ``c_P`` (the action on the tangent line), which is ``zeta``
or ``zeta**2``; a :class:`RamificationProfile` counts each kind. The pullback
action on holomorphic differentials has eigenvalue multiplicities ``(a, b)``
for ``zeta`` and ``zeta**2``; its trace is ``tau = a*zeta + b*zeta**2``.

The holomorphic Lefschetz formula ``1 - conj(tau) = sum_P 1/(1 - c_P)`` ties
the two together. Writing it out in the basis ``{1, zeta}`` gives::

    1 + a   = (2*h1 + h2) / 3
    a - b   = (h1 - h2) / 3

Taking absolute values, each summand has modulus ``1/sqrt(3)``, so a curve can
only exist when ``(g + 2)**2 >= 9*(a - b)**2``. When ``g + 2 < 3*|a - b|`` the
multiplicity data cannot come from a curve Jacobian.

Not every admissible profile is known to be realized by an actual curve;
:func:`enumerate_profiles` treats profiles purely combinatorially.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from a3check.errors import DomainError, InvariantViolation, NegativeMultiplicity, NonIntegral
from a3check.exactcore import ONE, ZETA, ZETA2, EisensteinNumber, Rational, eis_conj, eis_norm

# 1/(1 - zeta) and 1/(1 - zeta^2), computed by field inversion rather than pasted
INV_ONE_MINUS_ZETA = (ONE - ZETA).inverse()
INV_ONE_MINUS_ZETA2 = (ONE - ZETA2).inverse()


class Verdict(str, enum.Enum):
    NOT_JACOBIAN = "NOT_JACOBIAN"
    INCONCLUSIVE = "INCONCLUSIVE"


class _Profile(NamedTuple):
    h1: int
    h2: int


class RamificationProfile(_Profile):
    """Fixed-point counts by rotation number: ``h1`` with ``c_P = zeta``, ``h2`` with ``c_P = zeta**2``.

    There is deliberately no slot for ``c_P = 1``: fixed points of a
    nontrivial finite-order automorphism of a curve are nondegenerate.
    """

    __slots__ = ()

    def __new__(cls, h1: int, h2: int) -> RamificationProfile:
        if h1 < 0 or h2 < 0:
            raise DomainError(f"fixed-point counts must be nonnegative, got {(h1, h2)}")
        return tuple.__new__(cls, (h1, h2))

    def __repr__(self) -> str:
        return f"RamificationProfile(h1={self[0]}, h2={self[1]})"

    @property
    def h(self) -> int:
        return self[0] + self[1]

    def swapped(self) -> RamificationProfile:
        return RamificationProfile(self[1], self[0])

    def rotation_numbers(self) -> list[EisensteinNumber]:
        return [ZETA] * self[0] + [ZETA2] * self[1]


class _Pair(NamedTuple):
    a: int
    b: int


class MultiplicityPair(_Pair):
    """Multiplicities of the eigenvalues ``zeta`` (``a``) and ``zeta**2`` (``b``) on differentials."""

    __slots__ = ()

    def __new__(cls, a: int, b: int) -> MultiplicityPair:
        if a < 0 or b < 0:
            raise NegativeMultiplicity(f"multiplicities must be nonnegative, got {(a, b)}")
        return tuple.__new__(cls, (a, b))

    def __repr__(self) -> str:
        return f"MultiplicityPair(a={self[0]}, b={self[1]})"

    @property
    def g(self) -> int:
        return self[0] + self[1]

    def swapped(self) -> MultiplicityPair:
        return MultiplicityPair(self[1], self[0])


@dataclass(frozen=True)
class ScreeningReport:
    g: int
    a: int
    b: int
    tau: EisensteinNumber
    norm_one_minus_tau_conj: Rational
    bound_rhs: Rational
    verdict: Verdict

    @property
    def boundary(self) -> bool:
        """True when ``3|a - b| = g + 2``, the sharp case of the inequality."""
        return 3 * abs(self.a - self.b) == self.g + 2

    def implied_profile(self) -> tuple[int, int]:
        """Fixed-point counts a curve realizing ``(a, b)`` would need.

        Either count is negative exactly when the verdict is NOT_JACOBIAN.
        """
        return 2 * self.a - self.b + 1, 2 * self.b - self.a + 1


def _require_genus(g: int) -> None:
    if g <= 1:
        raise DomainError(f"g > 1 is required, got g = {g}")


def hurwitz_genus(h: int) -> int:
    """Genus of a cyclic triple cover of P^1 with ``h`` total ramification points.

    Riemann-Hurwitz: ``2g - 2 = 3*(-2) + 2*h``.
    """
    if h < 4:
        raise DomainError(f"g > 1 is required, i.e. h >= 4; got h = {h}")
    two_g = 3 * (-2) + 2 * h + 2
    return two_g // 2


def trace_from_multiplicities(m: MultiplicityPair) -> EisensteinNumber:
    """``tau = a*zeta + b*zeta**2``, which reduces to ``(-b) + (a - b)*zeta``."""
    a, b = m
    return ZETA * a + ZETA2 * b


def _tau_norm_closed(a: int, b: int) -> Rational:
    s, d = a + b + 2, a - b
    num = s * s + 3 * d * d
    return num >> 2 if not num & 3 else Fraction(num, 4)


def tau_norm(m: MultiplicityPair) -> Rational:
    """``|1 - conj(tau)|**2``, computed in closed form and in Q(zeta); both must agree."""
    closed = _tau_norm_closed(*m)
    field = eis_norm(ONE - eis_conj(trace_from_multiplicities(m)))
    if closed != field:
        raise InvariantViolation(f"norm routes disagree for {m}: closed {closed} vs field {field}")
    return closed


def profile_admissible(p: RamificationProfile) -> bool:
    """Integrality of the Lefschetz solution (``h1 = h2 mod 3``) and ``g > 1`` (``h >= 4``)."""
    return (p.h1 - p.h2) % 3 == 0 and p.h >= 4


def lefschetz_solve(p: RamificationProfile) -> MultiplicityPair:
    """Invert the Lefschetz identity for ``(a, b)``."""
    if p.h < 4:
        raise DomainError(f"g > 1 is required, i.e. h >= 4; got h = {p.h}")
    a3, b3 = 2 * p.h1 + p.h2 - 3, p.h1 + 2 * p.h2 - 3
    if a3 % 3 or b3 % 3:
        raise NonIntegral(f"profile {(p.h1, p.h2)} has h1 != h2 mod 3; no integral (a, b)")
    a, b = a3 // 3, b3 // 3
    if a < 0 or b < 0:
        raise NegativeMultiplicity(f"profile {(p.h1, p.h2)} solves to negative multiplicities {(a, b)}")
    return MultiplicityPair(a, b)


def lefschetz_sides(p: RamificationProfile, m: MultiplicityPair) -> tuple[EisensteinNumber, EisensteinNumber]:
    """``(1 - conj(tau), sum_P 1/(1 - c_P))``, both evaluated exactly."""
    lhs = ONE - eis_conj(trace_from_multiplicities(m))
    rhs = INV_ONE_MINUS_ZETA * p.h1 + INV_ONE_MINUS_ZETA2 * p.h2
    return lhs, rhs


def lefschetz_identity_check(p: RamificationProfile, m: MultiplicityPair) -> bool:
    lhs, rhs = lefschetz_sides(p, m)
    return lhs == rhs


def criterion_not_jacobian(m: MultiplicityPair) -> Verdict:
    """NOT_JACOBIAN iff ``g + 2 < 3|a - b|``. At or below the boundary nothing can be said."""
    _require_genus(m.g)
    if m.g + 2 < 3 * abs(m.a - m.b):
        return Verdict.NOT_JACOBIAN
    return Verdict.INCONCLUSIVE


def screen(m: MultiplicityPair) -> ScreeningReport:
    verdict = criterion_not_jacobian(m)
    norm = tau_norm(m)
    rhs = Fraction((m.g + 2) ** 2, 3)
    report = ScreeningReport(
        g=m.g,
        a=m.a,
        b=m.b,
        tau=trace_from_multiplicities(m),
        norm_one_minus_tau_conj=norm,
        bound_rhs=rhs.numerator if rhs.denominator == 1 else rhs,
        verdict=verdict,
    )
    # The Lefschetz bound |1 - conj(tau)|^2 <= (g+2)^2/3 must fail exactly on NOT_JACOBIAN.
    if (norm > report.bound_rhs) != (verdict is Verdict.NOT_JACOBIAN):
        raise InvariantViolation(f"norm bound and verdict disagree for {m}")
    return report


@dataclass
class EnumerationReport:
    g_max: int
    profiles: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)
    boundary: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def boundary_has_zero_count(self) -> bool:
        return all(min(p) == 0 for p in self.boundary)


def enumerate_profiles(g_max: int) -> EnumerationReport:
    """Check the inequality and the verdict on every admissible profile with genus <= ``g_max``.

    A violation is a profile where ``(g+2)**2 < 9*(a-b)**2``, where the
    verdict is not INCONCLUSIVE, or where Lefschetz and Hurwitz disagree on
    the genus. Any violation means a bug, not a counterexample.
    """
    _require_genus(g_max)
    report = EnumerationReport(g_max)
    for h in range(4, g_max + 3):
        g = hurwitz_genus(h)
        # h1 = h2 mod 3 with h1 + h2 = h  <=>  2*h1 = h mod 3  <=>  h1 = 2*h mod 3
        for h1 in range((2 * h) % 3, h + 1, 3):
            p = RamificationProfile(h1, h - h1)
            m = lefschetz_solve(p)
            report.profiles += 1
            lhs, rhs = (g + 2) ** 2, 9 * (m.a - m.b) ** 2
            if lhs < rhs or m.g != g or criterion_not_jacobian(m) is not Verdict.INCONCLUSIVE:
                report.violations.append((p.h1, p.h2))
            elif lhs == rhs:
                report.boundary.append((p.h1, p.h2))
    return report
