"""Dense multivariate polynomials over Q.

A :class:`Poly` is a mapping from exponent vectors to nonzero rational
coefficients over an ordered tuple of variable names. The sizes involved here
(degree <= 7 in five variables) make a plain dict the right representation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from a3check.errors import InputError
from a3check.exactcore.rational import Rational, as_rational, rational_str

Exponents = tuple[int, ...]


class Poly:
    __slots__ = ("_variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, object] | None = None) -> None:
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"repeated variable names in {variables}")
        n = len(variables)
        clean: dict[Exponents, Rational] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise InputError(f"bad exponent vector {exps} for variables {variables}")
            c = as_rational(coeff)
            if c:
                clean[exps] = as_rational(clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self._variables = variables
        self._terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], c: object) -> Poly:
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> Poly:
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Exponents, c: object = 1) -> Poly:
        return cls(variables, {tuple(exps): c})

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Exponents, Rational]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, Rational]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            p, q = self._align(other)
            return p._terms == q._terms
        return NotImplemented

    def __hash__(self) -> int:
        # independent of the ambient variable list, to agree with __eq__
        return hash(frozenset(
            (tuple((v, e) for v, e in zip(self._variables, exps) if e), c)
            for exps, c in self._terms.items()
        ))

    def __repr__(self) -> str:
        return f"Poly({self._variables!r}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render in the same grammar accepted by :func:`parse_poly`."""
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self:
            factors = []
            for name, e in zip(self._variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = rational_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([rational_str(mag)] + factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # ring structure

    def _align(self, other) -> tuple[Poly, Poly]:
        if isinstance(other, Poly):
            if other._variables == self._variables:
                return self, other
            merged = list(self._variables)
            merged += [v for v in other._variables if v not in merged]
            return self.with_variables(merged), other.with_variables(merged)
        return self, Poly.constant(self._variables, as_rational(other))

    def __neg__(self) -> Poly:
        return Poly(self._variables, {e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> Poly:
        p, q = self._align(other)
        terms = dict(p._terms)
        for e, c in q._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(p._variables, terms)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        p, q = self._align(other)
        return p + (-q)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        p, q = self._align(other)
        terms: dict[Exponents, Rational] = {}
        for e1, c1 in p._terms.items():
            for e2, c2 in q._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(p._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise InputError("negative powers of polynomials are not polynomials")
        result = Poly.constant(self._variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # structure queries

    def with_variables(self, variables: Sequence[str]) -> Poly:
        """Re-express over ``variables``; every variable actually used must be present."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * len(variables)
            for name, e in zip(self._variables, exps):
                if e:
                    if name not in index:
                        raise InputError(f"variable {name!r} not among {variables}")
                    new[index[name]] = e
            terms[tuple(new)] = c
        return Poly(variables, terms)

    def support_variables(self) -> tuple[str, ...]:
        used = [False] * len(self._variables)
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._variables, used) if u)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if len(degrees) > 1:
            return False
        return degree is None or degrees <= {degree}

    def coefficient(self, exps: Exponents) -> Rational:
        return self._terms.get(tuple(exps), 0)

    def partial(self, var: str) -> Poly:
        return poly_partial(self, var)

    def univariate_coeffs(self) -> list[Rational]:
        """Coefficients ``[c0, c1, ..., cd]`` of a univariate polynomial."""
        if len(self._variables) != 1:
            raise InputError(f"expected a univariate polynomial, got variables {self._variables}")
        if not self._terms:
            return []
        d = max(e[0] for e in self._terms)
        return [self._terms.get((i,), 0) for i in range(d + 1)]


def poly_partial(p: Poly, var: str) -> Poly:
    """Formal partial derivative of ``p`` with respect to ``var``."""
    if var not in p.variables:
        raise InputError(f"unknown variable {var!r}; polynomial is in {p.variables}")
    i = p.variables.index(var)
    terms = {}
    for exps, c in p.terms.items():
        if exps[i]:
            e = list(exps)
            e[i] -= 1
            terms[tuple(e)] = c * exps[i]
    return Poly(p.variables, terms)


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent vectors of total ``degree`` in ``nvars`` variables, in lex-descending order."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


# univariate helpers on coefficient lists [c0, ..., cd]

def _trim(c: list) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod_coeffs(num: list, den: list) -> tuple[list, list]:
    num = [Fraction(x) for x in _trim(num)]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        q = num[-1] / lead
        quot[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
        num = _trim(num)
    return quot, num


def coeffs_gcd(f: Iterable, g: Iterable) -> list[Rational]:
    """Monic gcd of two univariate polynomials by the Euclidean algorithm."""
    a, b = _trim(list(f)), _trim(list(g))
    while b:
        _, r = _divmod_coeffs(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [as_rational(Fraction(x) / lead) for x in a]


def poly_squarefree(f: Poly) -> bool:
    """True iff ``gcd(f, f')`` is a nonzero constant."""
    coeffs = f.univariate_coeffs()
    if not _trim(coeffs):
        raise InputError("the zero polynomial has no squarefree decomposition")
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    return len(coeffs_gcd(coeffs, deriv)) == 1
