"""Weighted hypersurface types and the structural checks used on them."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence


class InvalidTypeError(ValueError):
    """A set of weights / degree that fails a required structural condition."""


class CYSumError(InvalidTypeError):
    pass


class DivisibilityError(InvalidTypeError):
    pass


class ParityError(InvalidTypeError):
    pass


@dataclass(frozen=True)
class WeightedType:
    """The symbol (d, [a0, ..., an]); weight order is kept exactly as given."""

    degree: int
    weights: tuple[int, ...]

    def __init__(self, degree: int, weights: Sequence[int]):
        weights = tuple(int(w) for w in weights)
        if degree < 1:
            raise InvalidTypeError(f"degree must be positive, got {degree}")
        if not weights or any(w < 1 for w in weights):
            raise InvalidTypeError(f"weights must be positive integers, got {list(weights)}")
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "weights", weights)

    def sorted_view(self) -> WeightedType:
        return WeightedType(self.degree, sorted(self.weights))

    def __str__(self) -> str:
        return f"({self.degree},[{','.join(map(str, self.weights))}])"


def amplitude(t: WeightedType) -> int:
    return t.degree - sum(t.weights)


def _gcd_all(values) -> int:
    return reduce(gcd, values, 0)


def well_formed_weights(t: WeightedType) -> bool:
    """Every n-element sub-collection of the n+1 weights is coprime."""
    w = t.weights
    if len(w) == 1:
        return w[0] == 1
    return all(_gcd_all(w[:i] + w[i + 1:]) == 1 for i in range(len(w)))


def complementary_gcds_divide_degree(t: WeightedType) -> bool:
    """For every pair i < j, the gcd of the weights other than a_i, a_j divides d.

    For a curve the complement of a pair is a single weight, so e.g.
    (14, [1, 2, 3]) fails here because 3 does not divide 14.
    """
    w = t.weights
    for i, j in combinations(range(len(w)), 2):
        rest = [x for k, x in enumerate(w) if k not in (i, j)]
        if rest and t.degree % _gcd_all(rest):
            return False
    return True


def well_formed_type(t: WeightedType) -> bool:
    return well_formed_weights(t) and complementary_gcds_divide_degree(t)


def is_fermat_type(t: WeightedType) -> bool:
    return all(t.degree % w == 0 for w in t.weights)


class QSStatus(enum.Enum):
    QUASI_SMOOTH = "QuasiSmooth"
    INCONCLUSIVE = "Inconclusive"
    NOT_QUASI_SMOOTH_GENERAL = "NotQuasiSmoothGeneral"


@dataclass(frozen=True)
class QuasiSmoothVerdict:
    status: QSStatus
    criterion: str | None = None  # "F", "S", "M" when quasi-smooth
    witness: str | None = None

    @property
    def quasi_smooth(self) -> bool:
        return self.status is QSStatus.QUASI_SMOOTH


def _representable(target: int, weights: Sequence[int]) -> bool:
    """Whether ``target`` is a non-negative integer combination of ``weights``."""
    if target < 0:
        return False
    if target == 0:
        return True
    if not weights:
        return False
    ok = [False] * (target + 1)
    ok[0] = True
    for w in weights:
        for v in range(w, target + 1):
            if ok[v - w]:
                ok[v] = True
    return ok[target]


def _pointing_monomial(t: WeightedType, j: int) -> str | None:
    """A monomial x_j^k or x_j^k * x_l (l != j, k >= 1) of degree d, if one exists."""
    d, w = t.degree, t.weights
    if d % w[j] == 0:
        return f"x{j}^{d // w[j]}"
    for l, wl in enumerate(w):
        if l != j and d - wl >= w[j] and (d - wl) % w[j] == 0:
            return f"x{j}^{(d - wl) // w[j]}*x{l}"
    return None


def _fletcher_condition(t: WeightedType) -> str | None:
    """Check the subset condition for quasi-smoothness of a general member.

    For every nonempty set I of variables, either some degree-d monomial
    uses only variables from I, or there are |I| distinct variables e
    outside I with a degree-d monomial x_I^M * x_e.  Returns ``None`` when
    the condition holds, otherwise a description of the failing subset.
    """
    d, w = t.degree, t.weights
    n = len(w)
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            sub = [w[i] for i in idx]
            if _representable(d, sub):
                continue
            partners = [e for e in range(n) if e not in idx and _representable(d - w[e], sub)
                        and d - w[e] > 0]
            if len(partners) < size:
                return f"variables {list(idx)} have only {len(partners)} partner(s)"
    return None


def quasi_smooth_general(t: WeightedType) -> QuasiSmoothVerdict:
    """Three-tier verdict on quasi-smoothness of the general member of type ``t``.

    Criteria tried in order:

    F  every weight divides d (Fermat polynomial);
    S  every weight but one, a_j, divides d and d = k*a_j + a_l for some l != j;
    M  the subset condition of Iano-Fletcher, which also covers types with
       several weights not dividing d.

    A variable with no degree-d monomial x_j^k or x_j^k x_l at all makes
    every member singular, reported as ``NotQuasiSmoothGeneral``.
    """
    d, w = t.degree, t.weights
    non_div = [j for j, wj in enumerate(w) if d % wj]
    if not non_div:
        return QuasiSmoothVerdict(QSStatus.QUASI_SMOOTH, "F", "all weights divide the degree")
    if len(non_div) == 1:
        j = non_div[0]
        for l, wl in enumerate(w):
            if l != j and d - wl >= w[j] and (d - wl) % w[j] == 0:
                k = (d - wl) // w[j]
                return QuasiSmoothVerdict(
                    QSStatus.QUASI_SMOOTH, "S", f"{d}={k}*{w[j]}+{wl} (x{j}^{k}*x{l})"
                )
    covers = {}
    for j in range(len(w)):
        mono = _pointing_monomial(t, j)
        if mono is None:
            return QuasiSmoothVerdict(
                QSStatus.NOT_QUASI_SMOOTH_GENERAL,
                None,
                f"no degree-{d} monomial x{j}^k or x{j}^k*x_l for weight {w[j]}",
            )
        covers[j] = mono
    failure = _fletcher_condition(t)
    if failure is None:
        return QuasiSmoothVerdict(
            QSStatus.QUASI_SMOOTH, "M", "; ".join(covers[j] for j in non_div)
        )
    return QuasiSmoothVerdict(QSStatus.INCONCLUSIVE, None, failure)


@dataclass(frozen=True)
class SymmetricCYType:
    """Validated datum (A, 1, a, b, c) for s^m + H(x0, x1, x2) - x3^2 of degree 2c."""

    A: int
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return 2 * self.c

    @property
    def m(self) -> int:
        return 2 * self.c // self.A

    @property
    def weights(self) -> tuple[int, int, int, int, int]:
        return (self.A, 1, self.a, self.b, self.c)

    @property
    def wtype(self) -> WeightedType:
        return WeightedType(self.degree, self.weights)

    @property
    def curve_type(self) -> WeightedType:
        return WeightedType(self.degree, (1, self.a, self.b))

    def __str__(self) -> str:
        return str(self.wtype)


def make_symmetric_cy(A: int, a: int, b: int, c: int) -> SymmetricCYType:
    """Validate and build a symmetric Calabi-Yau datum.

    ``a`` and ``b`` are interchangeable (they are two variables of H), so
    they are stored in ascending order.
    """
    if min(A, a, b, c) < 1:
        raise InvalidTypeError(f"weights must be positive, got A={A} a={a} b={b} c={c}")
    a, b = sorted((a, b))
    if b >= c:
        raise InvalidTypeError(f"need b < c, got b={b} c={c}")
    if A != c - (1 + a + b):
        raise CYSumError(
            f"CY-sum violation: A={A} but c-(1+a+b)={c - (1 + a + b)} "
            f"(weights sum to {A + 1 + a + b + c}, degree {2 * c})"
        )
    if (2 * c) % A:
        raise DivisibilityError(f"divisibility violation: A={A} does not divide 2c={2 * c}")
    if ((2 * c) // A) % 2:
        raise ParityError(f"parity violation: m=2c/A={(2 * c) // A} is odd")
    return SymmetricCYType(A, a, b, c)


def quotient_type(t: SymmetricCYType, d: int) -> WeightedType:
    """Type of the quotient by the subgroup of order m/d: s-weight becomes A*m/d."""
    m = t.m
    if d < 1 or m % d or d >= m:
        raise InvalidTypeError(f"d={d} must be a divisor of m={m} with d < m")
    return WeightedType(t.degree, (t.A * (m // d), 1, t.a, t.b, t.c))
