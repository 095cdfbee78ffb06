"""Explicit curves ``y^3 = f(x)`` with the automorphism ``sigma: (x, y) -> (x, zeta*y)``.

Everything here is computed from valuations at the places of the curve,
independently of the Lefschetz solver in :mod:`a3check.covers`; the two
routes are compared in :func:`trigonal_report`.

Rotation-number convention: if ``t`` is a local parameter at a fixed point
and ``t o sigma = lambda * t``, the rotation number is ``lambda``. At a root
of ``f`` the parameter is ``y`` so ``c_P = zeta``. Pullback scales
``x^i dx / y^j`` by ``zeta^(-j)``. With these choices the Lefschetz identity
``1 - conj(tau) = sum 1/(1 - c_P)`` holds as written; swapping ``zeta`` and
``zeta^2`` everywhere would swap both ``(h1, h2)`` and ``(a, b)`` and change
no verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from a3check.covers import (
    MultiplicityPair,
    RamificationProfile,
    Verdict,
    criterion_not_jacobian,
    hurwitz_genus,
    lefschetz_identity_check,
    lefschetz_solve,
    profile_admissible,
)
from a3check.errors import CrossCheckFailure, DomainError, InputError
from a3check.exactcore import ZETA, ZETA2, EisensteinNumber, Poly, parse_poly, poly_squarefree


@dataclass(frozen=True)
class TrigonalCurve:
    f: Poly

    def __post_init__(self) -> None:
        if len(self.f.variables) != 1:
            raise InputError(f"f must be univariate, got variables {self.f.variables}")
        if not self.f:
            raise InputError("f must be nonzero")
        if not poly_squarefree(self.f):
            raise InputError(f"f = {self.f} is not squarefree")
        d = self.f.total_degree()
        if d < 4:
            raise DomainError(f"deg f = {d} < 4 gives genus <= 1; g > 1 is required")

    @classmethod
    def from_text(cls, text: str) -> TrigonalCurve:
        f = parse_poly(text)
        if len(f.variables) == 0:
            raise InputError("f must involve a variable")
        return cls(f)

    @property
    def degree(self) -> int:
        return self.f.total_degree()

    @property
    def variable(self) -> str:
        return self.f.variables[0]


@dataclass(frozen=True)
class Place:
    """A place of the curve, with the orders of ``x`` (or ``x - alpha``) and ``y`` there."""

    kind: str  # "root" or "infinity"
    ord_x: int
    ord_y: int
    ramification: int
    fixed: bool
    rotation: EisensteinNumber | None = None


@dataclass(frozen=True)
class DifferentialBasis:
    elements: tuple[tuple[int, int], ...]
    eigenvalues: tuple[EisensteinNumber, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def count(self, j: int) -> int:
        return sum(1 for _, jj in self.elements if jj == j)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return g, t, s - (a // b) * t


def _local_parameter_exponents(ord_x: int, ord_y: int) -> tuple[int, int]:
    """``(m, n)`` with ``x^m y^n`` of order exactly 1."""
    g, m, n = _ext_gcd(ord_x, ord_y)
    if g != 1:
        raise CrossCheckFailure("local parameter gcd", g, 1)
    return m, n


def places_at_infinity(c: TrigonalCurve) -> list[Place]:
    d = c.degree
    count = gcd(3, d)
    e = 3 // count
    ord_x = -e
    ord_y = d * ord_x // 3
    if 3 * ord_y != d * ord_x:
        raise CrossCheckFailure("3 ord(y) = d ord(x) at infinity", 3 * ord_y, d * ord_x)
    if e == 3:
        # single totally ramified place: sigma fixes it; read the rotation off a local parameter
        _, n = _local_parameter_exponents(ord_x, ord_y)
        return [Place("infinity", ord_x, ord_y, e, True, ZETA**n)]
    # three unramified places, told apart by the value of y / x^(d/3) (a cube root of the
    # leading coefficient); sigma multiplies that value by zeta, so it permutes them
    return [Place("infinity", ord_x, ord_y, e, False) for _ in range(count)]


def finite_branch_place() -> Place:
    # over a simple root alpha of f: x - alpha = y^3 * unit, local parameter y
    _, n = _local_parameter_exponents(3, 1)
    return Place("root", 3, 1, 3, True, ZETA**n)


def fixed_places(c: TrigonalCurve) -> list[Place]:
    roots = [finite_branch_place() for _ in range(c.degree)]
    return roots + [p for p in places_at_infinity(c) if p.fixed]


def trigonal_fixed_profile(c: TrigonalCurve) -> RamificationProfile:
    h1 = h2 = 0
    for p in fixed_places(c):
        if p.rotation == ZETA:
            h1 += 1
        elif p.rotation == ZETA2:
            h2 += 1
        else:
            raise CrossCheckFailure("rotation number is a primitive cube root", p.rotation, "zeta or zeta^2")
    return RamificationProfile(h1, h2)


def trigonal_genus(c: TrigonalCurve) -> int:
    return hurwitz_genus(len(fixed_places(c)))


def _order_of_differential(place: Place, i: int, j: int) -> int:
    """Order of ``x^i dx / y^j`` at ``place``."""
    if place.kind == "root":
        # x is a unit (or has order 3 if alpha = 0, which only helps), d(x - alpha) has order 2
        return (place.ord_x - 1) - j * place.ord_y
    # at infinity x has order ord_x < 0, so dx has order ord_x - 1
    return i * place.ord_x + (place.ord_x - 1) - j * place.ord_y


def differential_basis(c: TrigonalCurve) -> DifferentialBasis:
    """All holomorphic ``x^i dx / y^j`` with ``j in {1, 2}``.

    Away from the roots and infinity, ``y`` is a unit and ``x`` a coordinate,
    so only the places checked here can produce poles.
    """
    root = finite_branch_place()
    infinite = places_at_infinity(c)
    elements = []
    for j in (1, 2):
        if _order_of_differential(root, 0, j) < 0:
            continue
        i = 0
        while all(_order_of_differential(p, i, j) >= 0 for p in infinite):
            elements.append((i, j))
            i += 1
    eigen = tuple(ZETA ** (-j) for _, j in elements)
    return DifferentialBasis(tuple(elements), eigen)


def multiplicities_from_differentials(c: TrigonalCurve) -> MultiplicityPair:
    basis = differential_basis(c)
    a = sum(1 for z in basis.eigenvalues if z == ZETA)
    b = sum(1 for z in basis.eigenvalues if z == ZETA2)
    return MultiplicityPair(a, b)


@dataclass
class TrigonalReport:
    curve: TrigonalCurve
    genus: int
    profile: RamificationProfile
    basis: DifferentialBasis
    from_differentials: MultiplicityPair
    from_lefschetz: MultiplicityPair
    verdict: Verdict
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def boundary(self) -> bool:
        a, b = self.from_differentials
        return 3 * abs(a - b) == self.genus + 2


def trigonal_report(c: TrigonalCurve) -> TrigonalReport:
    """Run both multiplicity routes and every consistency check; raise on the first mismatch."""
    genus = trigonal_genus(c)
    profile = trigonal_fixed_profile(c)
    basis = differential_basis(c)
    mult = multiplicities_from_differentials(c)
    solved = lefschetz_solve(profile)
    checks = {
        "basis_size_equals_genus": len(basis) == genus,
        "hurwitz_coherence": solved.g == genus == profile.h - 2,
        "profile_admissible": profile_admissible(profile),
        "two_route_multiplicities": mult == solved,
        "lefschetz_identity": lefschetz_identity_check(profile, mult),
    }
    verdict = criterion_not_jacobian(mult)
    checks["verdict_inconclusive"] = verdict is Verdict.INCONCLUSIVE
    if len(basis) != genus:
        raise CrossCheckFailure("basis size vs genus", len(basis), genus)
    if mult != solved:
        raise CrossCheckFailure("multiplicities (differentials vs Lefschetz)", mult, solved)
    for name, ok in checks.items():
        if not ok:
            raise CrossCheckFailure(name, False, True)
    return TrigonalReport(c, genus, profile, basis, mult, solved, verdict, checks)
