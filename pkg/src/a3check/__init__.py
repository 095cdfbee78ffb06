"""Exact screening of order-3 automorphism data on abelian varieties."""

from a3check.covers import (
    MultiplicityPair,
    RamificationProfile,
    ScreeningReport,
    Verdict,
    criterion_not_jacobian,
    enumerate_profiles,
    hurwitz_genus,
    lefschetz_identity_check,
    lefschetz_solve,
    profile_admissible,
    screen,
    tau_norm,
    trace_from_multiplicities,
)
from a3check.exactcore import EisensteinNumber, Poly, RationalMatrix, parse_poly, rank_of_span

__all__ = [
    "EisensteinNumber",
    "MultiplicityPair",
    "Poly",
    "RamificationProfile",
    "RationalMatrix",
    "ScreeningReport",
    "Verdict",
    "criterion_not_jacobian",
    "enumerate_profiles",
    "hurwitz_genus",
    "lefschetz_identity_check",
    "lefschetz_solve",
    "parse_poly",
    "profile_admissible",
    "rank_of_span",
    "screen",
    "tau_norm",
    "trace_from_multiplicities",
]
