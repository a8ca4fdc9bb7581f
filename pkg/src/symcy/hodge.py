"""Graded dimensions of Jacobian rings and the Hodge numbers read off from them.

The partial derivatives of a quasi-smooth F of degree d form a regular
sequence of degrees d - a_i, so the Jacobian ring has Poincare series

    prod_i (1 - t^(d - a_i)) / (1 - t^(a_i)),

a polynomial of degree sum_i (d - 2 a_i) (the socle degree).  Only the type
enters, never an explicit equation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import InexactDivisionError, IntPolynomial, poly_div_exact, poly_mul
from .wtypes import InvalidTypeError, WeightedType, amplitude


@dataclass(frozen=True)
class HodgeVector:
    h30: int = 0
    h21: int = 0
    h12: int = 0
    h03: int = 0

    def __add__(self, other: HodgeVector) -> HodgeVector:
        return HodgeVector(self.h30 + other.h30, self.h21 + other.h21,
                           self.h12 + other.h12, self.h03 + other.h03)

    @property
    def total(self) -> int:
        return self.h30 + self.h21 + self.h12 + self.h03

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h30, self.h21, self.h12, self.h03)

    def is_symmetric(self) -> bool:
        return self.h30 == self.h03 and self.h21 == self.h12

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


ZERO = HodgeVector()


def socle_degree(t: WeightedType) -> int:
    return sum(t.degree - 2 * w for w in t.weights)


@lru_cache(maxsize=None)
def _milnor_polynomial(degree: int, weights: tuple[int, ...]) -> IntPolynomial:
    if any(w >= degree for w in weights):
        raise InexactDivisionError(
            f"degree {degree} does not exceed every weight {list(weights)}"
        )
    sigma = sum(degree - 2 * w for w in weights)
    if sigma < 0:
        raise InexactDivisionError(f"negative socle degree {sigma} for ({degree},{list(weights)})")
    num = IntPolynomial.one()
    den = IntPolynomial.one()
    top = sum(degree - w for w in weights)
    for w in weights:
        num = poly_mul(num, IntPolynomial.from_terms({0: 1, degree - w: -1}), top)
        den = poly_mul(den, IntPolynomial.from_terms({0: 1, w: -1}), top)
    return poly_div_exact(num, den, sigma)


def milnor_series(t: WeightedType, cap: int | None = None) -> IntPolynomial:
    """Poincare series of the Jacobian ring, truncated at ``cap`` (default: socle degree)."""
    p = _milnor_polynomial(t.degree, t.weights)
    return p if cap is None else p.truncate(cap)


def jacobian_dim(t: WeightedType, k: int) -> int:
    """dim R_F^k for a quasi-smooth F of type ``t``."""
    if k < 0:
        return 0
    return milnor_series(t)[k]


def hodge_numbers_cy3(t: WeightedType) -> HodgeVector:
    """(h30, h21, h12, h03) of a quasi-smooth Calabi-Yau threefold hypersurface.

    With amplitude 0, the residue of M * Omega / F^(q+1) needs deg M = q*d,
    so h^{3-q,q} = dim R^{q d}.
    """
    if len(t.weights) != 5:
        raise InvalidTypeError(f"need 5 weights for a threefold, got {len(t.weights)}")
    if amplitude(t) != 0:
        raise InvalidTypeError(
            f"CY-sum violation: amplitude of {t} is {amplitude(t)}, not 0"
        )
    d = t.degree
    r = milnor_series(t)
    return HodgeVector(r[0], r[d], r[2 * d], r[3 * d])


def genus(t: WeightedType) -> int:
    """Genus of a quasi-smooth curve of type (d, [w0, w1, w2]): dim R^(amplitude)."""
    if len(t.weights) != 3:
        raise InvalidTypeError(f"need 3 weights for a plane curve, got {len(t.weights)}")
    return jacobian_dim(t, amplitude(t))


def kuranishi_dim(t: WeightedType) -> int:
    """Dimension of the tangent space to projective deformations, dim R^d."""
    return jacobian_dim(t, t.degree)
