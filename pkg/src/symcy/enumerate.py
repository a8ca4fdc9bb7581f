"""Bounded searches: 5-term Egyptian fractions, Fermat-type and non-Fermat symmetric CY types."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .arith import divisors
from .equivariant import IsotypicalDecomposition, isotypical_decomposition
from .hodge import genus, hodge_numbers_cy3
from .wtypes import (
    InvalidTypeError,
    QuasiSmoothVerdict,
    SymmetricCYType,
    WeightedType,
    amplitude,
    make_symmetric_cy,
    quasi_smooth_general,
    well_formed_type,
)

# Largest denominator among all 5-term Egyptian fractions of 1 (2, 3, 7, 43, 1806);
# bounds every denominator in the non-Fermat searches.
DENOMINATOR_BOUND = 1806


@dataclass(frozen=True, order=True)
class EgyptianSolution:
    denoms: tuple[int, int, int, int, int]

    @property
    def first(self) -> int:
        return self.denoms[0]


def egyptian_solutions(total: Fraction, terms: int, smallest: int = 1) -> list[tuple[int, ...]]:
    """All nondecreasing tuples of ``terms`` unit fractions summing to ``total``.

    Depth-first: with remainder R and k terms left the next denominator x
    satisfies 1/x <= R (x >= ceil(1/R)) and k/x >= R (x <= floor(k/R)).
    """
    if total <= 0:
        return []
    if terms == 1:
        if total.numerator == 1 and total.denominator >= smallest:
            return [(total.denominator,)]
        return []
    lo = max(smallest, -(-total.denominator // total.numerator))
    hi = (terms * total.denominator) // total.numerator
    out = []
    for x in range(lo, hi + 1):
        for rest in egyptian_solutions(total - Fraction(1, x), terms - 1, x):
            out.append((x,) + rest)
    return out


@lru_cache(maxsize=None)
def _egyptian_five() -> tuple[EgyptianSolution, ...]:
    return tuple(EgyptianSolution(s) for s in egyptian_solutions(Fraction(1), 5))


def egyptian_five(min_first: int = 1) -> list[EgyptianSolution]:
    """Every 1 = 1/n + 1/p + 1/q + 1/r + 1/s with n <= p <= q <= r <= s."""
    return [s for s in _egyptian_five() if s.first >= min_first]


def egyptian_counts(solutions: Sequence[EgyptianSolution]) -> dict[int, int]:
    return dict(sorted(Counter(s.first for s in solutions).items()))


@dataclass(frozen=True)
class FermatRow:
    quad: tuple[int, int, int, int]  # (x, y, t, 2c)
    cy: SymmetricCYType
    h12: int
    g: int
    decomposition: IsotypicalDecomposition = field(compare=False)

    @property
    def order(self) -> int:
        return self.cy.m

    @property
    def wtype(self) -> WeightedType:
        return self.cy.wtype

    @property
    def repstring(self) -> str:
        return self.decomposition.repstring


def _fermat_candidate(x: int, y: int, t: int, two_c: int) -> SymmetricCYType | None:
    if t % 2 or two_c % x or two_c % y or two_c % t or x > y:
        return None
    if max(x, y, t) > two_c:
        return None
    b, a, A, c = two_c // x, two_c // y, two_c // t, two_c // 2
    if b >= c:
        return None
    # 1/2c + 1/x + 1/y + 1/t + 1/2 = 1 is exactly the CY sum; checked, not assumed.
    if A != c - (1 + a + b):
        raise AssertionError(f"Egyptian identity broken for {(x, y, t, two_c)}")
    try:
        cy = make_symmetric_cy(A, a, b, c)
    except InvalidTypeError:
        return None
    wt = cy.wtype
    if not well_formed_type(wt) or not quasi_smooth_general(wt).quasi_smooth:
        return None
    return cy


def _type_order_key(cy: SymmetricCYType):
    return (cy.degree, cy.A, cy.a, cy.b, cy.c)


@lru_cache(maxsize=None)
def _classify_fermat() -> tuple[FermatRow, ...]:
    quads = set()
    for sol in egyptian_five(2):
        if sol.first != 2:
            continue
        rest = sol.denoms[1:]
        two_c = max(rest)
        for x, y, t, last in set(permutations(rest)):
            if last != two_c:
                continue
            if _fermat_candidate(x, y, t, two_c) is not None:
                quads.add((x, y, t, two_c))
    rows = []
    for quad in quads:
        cy = _fermat_candidate(*quad)
        rows.append(FermatRow(
            quad=quad,
            cy=cy,
            h12=hodge_numbers_cy3(cy.wtype).h12,
            g=genus(cy.curve_type),
            decomposition=isotypical_decomposition(cy),
        ))
    rows.sort(key=lambda r: (_type_order_key(r.cy), r.quad))
    return tuple(rows)


def classify_fermat() -> list[FermatRow]:
    """Fermat-type symmetric CY threefolds from the n = 2 Egyptian fractions."""
    return list(_classify_fermat())


@dataclass(frozen=True)
class NonFermatRow:
    """A tuple (A, 1, a, e, c) in print order: s has weight A, x_e is the non-dividing weight.

    ``r * e = 2c - 1`` (case 1, partner x0 of weight 1) or ``r * e = 2c - 2``
    (case 2, partner of weight a = 2).
    """

    weights: tuple[int, int, int, int, int]
    case: int
    r: int
    e: int

    @property
    def degree(self) -> int:
        return sum(self.weights)

    @property
    def cy(self) -> SymmetricCYType:
        A, _, a, e, c = self.weights
        return make_symmetric_cy(A, a, e, c)

    @property
    def underlying(self) -> tuple[int, ...]:
        """Sorted weight multiset; rows sharing it differ only in the covering map."""
        return tuple(sorted(self.weights))


def _accept(weights: Sequence[int]) -> bool:
    wt = WeightedType(sum(weights), weights)
    return amplitude(wt) == 0 and well_formed_type(wt) and quasi_smooth_general(wt).quasi_smooth


def _nonfermat_search(case: int, bound: int) -> list[NonFermatRow]:
    rows = []
    shift = 1 if case == 1 else 2
    for two_c in range(4, bound + 1, 2):
        c = two_c // 2
        for A in divisors(two_c):
            if (two_c // A) % 2:
                continue
            partners = divisors(two_c) if case == 1 else [2]
            for a in partners:
                e = c - 1 - A - a
                if e <= 1 or two_c % e == 0 or (two_c - shift) % e:
                    continue
                r = (two_c - shift) // e
                if r > bound or two_c // a > bound:
                    continue
                weights = (A, 1, a, e, c)
                if e >= c or not _accept(weights):
                    continue
                rows.append(NonFermatRow(weights, case, r, e))
    rows.sort(key=lambda row: (row.degree, row.weights))
    return rows


def search_case1(bound: int = DENOMINATOR_BOUND) -> list[NonFermatRow]:
    """Types (A,1,a,e,c) with A, a | 2c, 2c/A even and e | 2c - 1 (monomial x_e^r x0)."""
    return _nonfermat_search(1, bound)


def search_case2(bound: int = DENOMINATOR_BOUND) -> list[NonFermatRow]:
    """Types (A,1,2,e,c) with A | 2c, 2c/A even and e | 2c - 2 (monomial x_e^r x_a)."""
    return _nonfermat_search(2, bound)


@dataclass(frozen=True)
class VerificationReport:
    weights: tuple[int, ...]
    checks: dict[str, bool]
    quasi_smooth: QuasiSmoothVerdict | None

    @property
    def structural_ok(self) -> bool:
        return all(self.checks.values())

    @property
    def passed(self) -> bool:
        return self.structural_ok and self.quasi_smooth is not None and self.quasi_smooth.quasi_smooth

    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


STRUCTURAL_CHECKS = ("sum", "A_divides_2c", "m_even", "A_divides_c", "well_formed", "amplitude_zero")


def verify_row(weights: Sequence[int]) -> VerificationReport:
    """Structural checks on a tuple (A, 1, a, b, c); degree is taken to be 2c."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != 5:
        raise InvalidTypeError(f"expected 5 weights, got {len(weights)}: {weights}")
    if min(weights) < 1:
        raise InvalidTypeError(f"weights must be positive: {weights}")
    A, c = weights[0], weights[4]
    two_c = 2 * c
    wt = WeightedType(two_c, weights)
    checks = {
        "sum": sum(weights) == two_c,
        "A_divides_2c": two_c % A == 0,
        "m_even": two_c % A == 0 and (two_c // A) % 2 == 0,
        "A_divides_c": c % A == 0,
        "well_formed": well_formed_type(wt),
        "amplitude_zero": amplitude(wt) == 0,
    }
    return VerificationReport(weights, checks, quasi_smooth_general(wt))
