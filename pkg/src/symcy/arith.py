"""Exact number theory helpers and truncated integer series arithmetic.

Everything here works on Python ints, so there is no overflow to guard
against.  Series are stored densely up to an explicit degree cap supplied
by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _gcd
from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    """Raised when a series quotient that should be a polynomial is not."""


def gcd(a: int, b: int) -> int:
    return _gcd(a, b)


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi() needs a positive integer, got {n}")
    result, rest, p = n, n, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial / truncated series, ``coeffs[k]`` is the t^k coefficient."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += v
        return cls(c)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, cap: int) -> IntPolynomial:
        return IntPolynomial(self.coeffs[: cap + 1])

    def terms(self) -> list[tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial(0)"
        parts = []
        for k, c in self.terms():
            parts.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        return "IntPolynomial(" + " + ".join(parts) + ")"


def poly_mul(p: IntPolynomial, q: IntPolynomial, cap: int) -> IntPolynomial:
    """Product of ``p`` and ``q`` with every term above degree ``cap`` dropped."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if len(q.terms()) > len(p.terms()):
        p, q = q, p
    out = [0] * (cap + 1)
    pc = p.coeffs[: cap + 1]
    for j, b in q.terms():
        if j > cap:
            break
        for i, a in enumerate(pc[: cap + 1 - j]):
            if a:
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_div_exact(p: IntPolynomial, q: IntPolynomial, cap: int) -> IntPolynomial:
    """Quotient ``p / q`` as a power series, kept up to degree ``cap``.

    ``q`` must have constant term +1 or -1.  When ``cap`` reaches
    ``deg p - deg q`` the division must be exact as polynomials, otherwise
    :class:`InexactDivisionError` is raised.  Long division works one degree
    at a time and only walks the nonzero terms of ``q``, so dividing by a
    binomial such as ``1 - t^a`` is linear in ``cap``.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if not q.coeffs or q[0] not in (1, -1):
        raise InexactDivisionError(f"divisor must have constant term +-1, got {q!r}")
    lead = q[0]
    tail = [(j, b) for j, b in q.terms() if j > 0]
    n = max(cap + q.degree, p.degree) + 1
    rem = list(p.coeffs) + [0] * (n - len(p.coeffs))
    quot = [0] * (cap + 1)
    for k in range(cap + 1):
        c = rem[k] * lead
        if c == 0:
            continue
        quot[k] = c
        rem[k] = 0
        for j, b in tail:
            rem[k + j] -= c * b
    if cap >= p.degree - q.degree and any(rem):
        high = next(k for k, c in enumerate(rem) if c)
        raise InexactDivisionError(
            f"{p!r} is not divisible by {q!r}: remainder starts in degree {high}"
        )
    return IntPolynomial(quot)


@dataclass(frozen=True)
class BigradedPolynomial:
    """Series in ``t`` whose coefficients are split by a residue class mod ``modulus``."""

    modulus: int
    coeffs: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        clean: dict[tuple[int, int], int] = {}
        for (deg, res), v in self.coeffs.items():
            if deg < 0:
                raise ValueError("negative degree")
            key = (deg, res % self.modulus)
            clean[key] = clean.get(key, 0) + v
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def one(cls, modulus: int) -> BigradedPolynomial:
        return cls(modulus, {(0, 0): 1})

    @classmethod
    def lift(cls, p: IntPolynomial, modulus: int, residue: int = 0) -> BigradedPolynomial:
        return cls(modulus, {(k, residue): c for k, c in p.terms()})

    def __getitem__(self, key: tuple[int, int]) -> int:
        deg, res = key
        return self.coeffs.get((deg, res % self.modulus), 0)

    def collapse(self) -> IntPolynomial:
        """Forget the residue grading."""
        out: dict[int, int] = {}
        for (deg, _), v in self.coeffs.items():
            out[deg] = out.get(deg, 0) + v
        return IntPolynomial.from_terms(out)

    def in_degree(self, deg: int) -> list[int]:
        """Coefficients of ``t^deg`` listed by residue 0..modulus-1."""
        return [self.coeffs.get((deg, r), 0) for r in range(self.modulus)]

    def __eq__(self, other):
        if not isinstance(other, BigradedPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.modulus, tuple(self.coeffs.items())))


def bigraded_mul(p: BigradedPolynomial, q: BigradedPolynomial, cap: int) -> BigradedPolynomial:
    if p.modulus != q.modulus:
        raise ValueError(f"modulus mismatch: {p.modulus} vs {q.modulus}")
    m = p.modulus
    out: dict[tuple[int, int], int] = {}
    for (d1, r1), v1 in p.coeffs.items():
        if d1 > cap:
            continue
        for (d2, r2), v2 in q.coeffs.items():
            deg = d1 + d2
            if deg > cap:
                continue
            key = (deg, (r1 + r2) % m)
            out[key] = out.get(key, 0) + v1 * v2
    return BigradedPolynomial(m, out)
