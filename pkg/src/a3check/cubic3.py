"""Cyclic cubic threefolds ``T: y^3 = F(x0, x1, x2, x3)`` in P^4.

The Jacobian ring of ``G = y^3 - F`` is ``R = Q[x0..x3, y] / (dG/dx0, ..., dG/dy)``.
For a smooth cubic threefold Griffiths' residue map identifies ``H^{2,1}``
with ``R^1`` (forms ``A * Omega / G^2`` with ``deg A = 1``) and ``H^{3,0}``
with the empty piece ``R^{-2}``. Each graded piece is computed as a cokernel
with exact linear algebra. Smoothness is the Artinian test ``R^6 = 0``.

``mu_3`` acts by ``y -> zeta*y``. ``G`` is invariant and the volume form
``Omega`` picks up one factor of ``zeta``, so the monomial class
``x^alpha * y^e`` in ``R^1`` has eigenvalue ``zeta^(e + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from a3check.covers import MultiplicityPair, ScreeningReport, Verdict, screen
from a3check.errors import InputError, InvariantViolation, NotSmooth
from a3check.exactcore import Poly, echelon_pivots, monomials_of_degree, parse_poly, poly_partial

FORM_VARIABLES = ("x0", "x1", "x2", "x3")
THREEFOLD_VARIABLES = FORM_VARIABLES + ("y",)
SOCLE_DEGREE = 5  # (number of variables) * (degree - 2)


@dataclass(frozen=True)
class CubicForm:
    F: Poly

    def __post_init__(self) -> None:
        if not self.F:
            raise InputError("F must be nonzero")
        if not self.F.is_homogeneous(3):
            raise InputError(f"F = {self.F} is not a homogeneous cubic")
        object.__setattr__(self, "F", self.F.with_variables(FORM_VARIABLES))

    @classmethod
    def from_text(cls, text: str) -> CubicForm:
        return cls(parse_poly(text, FORM_VARIABLES))

    def threefold_form(self) -> Poly:
        """``G = y^3 - F`` over ``x0..x3, y``."""
        y = Poly.variable(THREEFOLD_VARIABLES, "y")
        return y**3 - self.F.with_variables(THREEFOLD_VARIABLES)


@dataclass(frozen=True)
class HodgeProfile:
    h21: int
    mult_zeta: int
    mult_zeta2: int
    basis: tuple[tuple[int, ...], ...] = ()

    @property
    def conjugate(self) -> tuple[int, int]:
        """Multiplicities ``(zeta, zeta^2)`` on ``H^{1,2}``, the complex conjugate space."""
        return self.mult_zeta2, self.mult_zeta


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    monomials: tuple[tuple[int, ...], ...]
    ideal_rank: int
    standard: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.ideal_rank


def jacobian_generators(F: CubicForm) -> list[Poly]:
    G = F.threefold_form()
    return [poly_partial(G, v) for v in THREEFOLD_VARIABLES]


def ideal_rows(F: CubicForm, k: int) -> tuple[list[tuple[int, ...]], list[dict[int, object]]]:
    """Degree-``k`` monomial basis and the rows spanning the Jacobian ideal in degree ``k``."""
    monos = monomials_of_degree(len(THREEFOLD_VARIABLES), k)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for gen in jacobian_generators(F):
        for m in monomials_of_degree(len(THREEFOLD_VARIABLES), k - 2):
            row = {}
            for exps, c in gen.terms.items():
                row[index[tuple(a + b for a, b in zip(exps, m))]] = c
            rows.append(row)
    return monos, rows


def graded_piece(F: CubicForm, k: int) -> GradedPiece:
    """``R^k`` with a monomial basis: the columns left without a pivot after elimination.

    The generators and their monomial multiples are ``mu_3`` eigenvectors, so
    elimination never mixes weights and the standard monomials split by weight
    the same way ``R^k`` does.
    """
    if k < 0:
        return GradedPiece(k, (), 0, ())
    monos, rows = ideal_rows(F, k)
    pivots = echelon_pivots(rows)
    standard = tuple(m for i, m in enumerate(monos) if i not in pivots)
    return GradedPiece(k, tuple(monos), len(pivots), standard)


def jacobian_ring_dim(F: CubicForm, k: int) -> int:
    return graded_piece(F, k).dim


def artinian_smoothness_check(F: CubicForm) -> bool:
    return jacobian_ring_dim(F, SOCLE_DEGREE + 1) == 0


def weight(monomial: tuple[int, ...]) -> int:
    """Exponent ``w`` of the eigenvalue ``zeta^w`` of ``monomial * Omega``, in ``{0, 1, 2}``."""
    return (monomial[-1] + 1) % 3


def hodge21_multiplicities(F: CubicForm) -> HodgeProfile:
    if not artinian_smoothness_check(F):
        raise NotSmooth(f"y^3 = {F.F} is singular (Jacobian ring does not vanish in degree 6)")
    piece = graded_piece(F, 1)
    if piece.ideal_rank:
        raise InvariantViolation("Jacobian ideal meets degree 1; refusing to pick a basis")
    counts = [0, 0, 0]
    for m in piece.standard:
        counts[weight(m)] += 1
    if counts[0]:
        raise InvariantViolation(f"invariant classes in H^(2,1): {counts[0]}")
    return HodgeProfile(piece.dim, counts[1], counts[2], piece.standard)


def intermediate_jacobian_verdict(F: CubicForm) -> ScreeningReport:
    """Screen ``J(T)``: its differentials carry the same multiplicities as ``H^{2,1}``."""
    hodge = hodge21_multiplicities(F)
    report = screen(MultiplicityPair(hodge.mult_zeta, hodge.mult_zeta2))
    if report.g != hodge.h21:
        raise InvariantViolation(f"dim J(T) = {report.g} but h21 = {hodge.h21}")
    if report.verdict is not Verdict.NOT_JACOBIAN:
        raise InvariantViolation(f"smooth cubic threefold screened {report.verdict.value}")
    return report
