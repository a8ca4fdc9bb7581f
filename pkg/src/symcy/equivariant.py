"""Eigenspaces of the cyclic action s -> rho_m * s on H^3 and their rational grouping.

F = s^m + H(x0, x1, x2) - x3^2 has separated variables, so its Jacobian ring
is C[s]/(s^(m-1)) (x) R_H (x) C[x3]/(x3).  Tracking the exponent j of s modulo
m in the Poincare series gives the eigenvalue of every residue class: the
residue of s^j * M * Omega / F^(q+1) is an eigenvector for rho_m^(j+1), since
Omega picks up one factor rho_m and F is invariant.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .arith import BigradedPolynomial, bigraded_mul, divisors, euler_phi
from .hodge import ZERO, HodgeVector, milnor_series
from .wtypes import InvalidTypeError, SymmetricCYType


class MultiplicityError(ArithmeticError):
    """An isotypical component whose dimension is not a multiple of phi(d)."""


@dataclass(frozen=True)
class EigenspaceTable:
    """``rows[e]`` is the Hodge vector of the rho_m^e eigenspace on H^3(X, C)."""

    m: int
    rows: tuple[HodgeVector, ...]

    def __getitem__(self, e: int) -> HodgeVector:
        return self.rows[e % self.m]

    @property
    def total(self) -> HodgeVector:
        acc = ZERO
        for row in self.rows:
            acc = acc + row
        return acc


@dataclass(frozen=True)
class IsotypicalDecomposition:
    """Multiplicity and Hodge vector of Psi_{d,m} H^3 for every divisor d of m."""

    m: int
    components: dict[int, tuple[int, HodgeVector]] = field(hash=False)

    def multiplicity(self, d: int) -> int:
        return self.components[d][0]

    def hodge(self, d: int) -> HodgeVector:
        return self.components[d][1]

    def multiset(self) -> set[tuple[int, int]]:
        """{(multiplicity, divisor)} over divisors carrying a nonzero component."""
        return {(mu, d) for d, (mu, _) in self.components.items() if mu}

    @property
    def repstring(self) -> str:
        return rep_string(self)


def _s_exponent_series(t: SymmetricCYType, cap: int) -> BigradedPolynomial:
    # Jacobian ideal contains s^(m-1): exponents 0..m-2, each in its own residue.
    return BigradedPolynomial(
        t.m, {(t.A * j, j): 1 for j in range(t.m - 1) if t.A * j <= cap}
    )


def bigraded_milnor_series(t: SymmetricCYType, cap: int | None = None) -> BigradedPolynomial:
    """Poincare series of R_F graded by degree and by s-exponent mod m."""
    if cap is None:
        cap = 3 * t.degree
    curve = milnor_series(t.curve_type, cap)
    return bigraded_mul(_s_exponent_series(t, cap), BigradedPolynomial.lift(curve, t.m), cap)


def _eigen_counts(series: BigradedPolynomial, degree: int) -> list[int]:
    """Per-eigenvalue dimension in ``degree``: s-exponent j feeds eigenvalue j + 1."""
    m = series.modulus
    by_residue = series.in_degree(degree)
    return [by_residue[(e - 1) % m] for e in range(m)]


def eigenspace_table(t: SymmetricCYType) -> EigenspaceTable:
    m, d = t.m, t.degree
    h21 = _eigen_counts(bigraded_milnor_series(t, d), d)
    rows = []
    for e in range(m):
        rows.append(HodgeVector(
            h30=1 if e == 1 else 0,
            h21=h21[e],
            h12=h21[(m - e) % m],
            h03=1 if e == m - 1 else 0,
        ))
    return EigenspaceTable(m, tuple(rows))


def cross_check_h12(t: SymmetricCYType) -> bool:
    """Compare h12 per eigenvalue from degree 4c with the conjugation rule."""
    m, d = t.m, t.degree
    series = bigraded_milnor_series(t, 3 * d)
    direct_h12 = _eigen_counts(series, 2 * d)
    direct_h03 = _eigen_counts(series, 3 * d)
    table = eigenspace_table(t)
    return all(
        direct_h12[e] == table[e].h12 and direct_h03[e] == table[e].h03
        for e in range(m)
    )


def isotypical_decomposition(t: SymmetricCYType) -> IsotypicalDecomposition:
    table = eigenspace_table(t)
    m = t.m
    comps: dict[int, tuple[int, HodgeVector]] = {}
    for d in divisors(m):
        hv = ZERO
        for k in range(1, d + 1):
            if gcd(k, d) == 1:
                hv = hv + table[k * (m // d)]
        phi = euler_phi(d)
        if hv.total % phi:
            raise MultiplicityError(
                f"component d={d} of {t} has dimension {hv.total}, not a multiple of phi={phi}"
            )
        comps[d] = (hv.total // phi, hv)
    return IsotypicalDecomposition(m, comps)


def quotient_hodge(t: SymmetricCYType, d: int) -> HodgeVector:
    """H^3 of the quotient Y_d = X / <g^(m/d)>, the sum of Psi_e for e | d."""
    m = t.m
    if d < 1 or m % d or d >= m:
        raise InvalidTypeError(f"d={d} must be a divisor of m={m} with d < m")
    dec = isotypical_decomposition(t)
    hv = ZERO
    for e in divisors(d):
        hv = hv + dec.hodge(e)
    return hv


def rep_string(dec: IsotypicalDecomposition) -> str:
    """Group divisors by multiplicity, e.g. ``14.(48,8,6,4,2)+13.(24,12,3)``.

    The group holding m comes first, the others follow by descending
    multiplicity; divisors inside a group are descending.
    """
    groups: dict[int, list[int]] = {}
    for d, (mu, _) in dec.components.items():
        if mu:
            groups.setdefault(mu, []).append(d)
    if not groups:
        return ""
    top = dec.components.get(dec.m, (0, ZERO))[0]
    order = sorted(groups, key=lambda mu: (mu != top, -mu))
    return "+".join(
        f"{mu}.({','.join(str(d) for d in sorted(groups[mu], reverse=True))})" for mu in order
    )


_GROUP = re.compile(r"(\d+)\s*\.?\s*\(([\d,\s]*)\)")


def parse_rep_string(text: str) -> set[tuple[int, int]]:
    """Read a printed representation string into {(multiplicity, divisor)}.

    Tolerates the loose forms found in printed tables such as ``30(6,4,2)``.
    """
    out: set[tuple[int, int]] = set()
    for mu, body in _GROUP.findall(text):
        for d in body.split(","):
            if d.strip():
                out.add((int(mu), int(d)))
    return out
