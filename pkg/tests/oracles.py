"""Independent reference computations used by the tests."""

import random
from fractions import Fraction

from a3check.cubic3 import CubicForm, artinian_smoothness_check, ideal_rows

FERMAT = "x0^3 + x1^3 + x2^3 + x3^3"
PERTURBING_MONOMIALS = ["x0^2*x1", "x0^2*x2", "x0*x1*x2", "x1*x2*x3", "x0*x1*x3", "x2^2*x3",
                        "x3^2*x0", "x1^2*x2", "x0*x2*x3", "x1*x3^2"]


def dense_rank(rows, ncols):
    """Textbook Gaussian elimination over Fraction on a dense copy."""
    m = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        nz = [j for j in range(col, ncols) if p[j] != 0]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            if f:
                f /= p[col]
                row = m[i]
                for j in nz:
                    row[j] -= f * p[j]
        rank += 1
    return rank


def oracle_dim(F, k):
    monos, rows = ideal_rows(F, k)
    return len(monos) - (dense_rank(rows, len(monos)) if rows else 0)


def smooth_perturbations(n, seed):
    """``n`` smooth cubics: Fermat plus a few random integer-weighted monomials."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        chosen = rng.sample(PERTURBING_MONOMIALS, rng.randint(1, 5))
        extra = " + ".join(f"{rng.randint(-4, 4)}*{m}" for m in chosen)
        F = CubicForm.from_text(f"{FERMAT} + {extra}")
        if artinian_smoothness_check(F):
            out.append(F)
    return out
