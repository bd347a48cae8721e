"""Closed-form counts for the non-crossing posets, in exact arithmetic.

Every function returns plain ints; intermediate rationals are Fractions and
any division is checked to land on an integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention 0 for b < 0 or b > a (a must be >= 0)."""
    if a < 0:
        raise ValueError("upper argument must be nonnegative; use gbinom")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def gbinom(a: int, k: int) -> int:
    """C(a, k) for any integer a, as the degree-k polynomial a(a-1)...(a-k+1)/k!."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= a - t
    value = Fraction(num, factorial(k))
    assert value.denominator == 1
    return int(value)


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return int(value)


def catalan(n: int) -> int:
    """Number of non-crossing partitions of {1..n}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Rank-k count in the non-crossing partitions of {1..n}: C(n,k)C(n,k+1)/n."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"rank {k} out of range 0..{n - 1}")
    return _exact(Fraction(binom(n, k) * binom(n, k + 1), n))


class DiscCounts(NamedTuple):
    """Headline numbers for the one-circle type B poset on 2n points."""

    rank_counts: tuple[int, ...]
    total: int
    mobius_a: int
    mobius_b: int


def disc_counts(n: int) -> DiscCounts:
    """Rank counts C(n,k)^2, total C(2n,n), and both Moebius values."""
    if n < 1:
        raise ValueError("n must be positive")
    rank_counts = tuple(binom(n, k) ** 2 for k in range(n + 1))
    total = binom(2 * n, n)
    mobius_a = (-1) ** (n + 1) * factorial(2 * n - 2) // (factorial(n - 1) * factorial(n))
    mobius_b = (-1) ** n * binom(2 * n - 1, n)
    return DiscCounts(rank_counts, total, mobius_a, mobius_b)


def annulus_cell_count(p: int, q: int, c: int, e: int, i: int) -> int:
    """Partitions of the (p, q) poset with c connecting, e exterior and
    i interior block pairs; out-of-range statistics give 0."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    if c < 1 or e < 0 or i < 0:
        return 0
    return 2 * c * binom(p, e) * binom(p, e + c) * binom(q, i) * binom(q, i + c)


def annulus_connectivity_count(p: int, q: int, c: int) -> int:
    """Partitions of the (p, q) poset with exactly c connecting pairs."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    if c < 0:
        return 0
    if c == 0:
        return binom(2 * p, p) * binom(2 * q, q)
    return 2 * c * binom(2 * p, p - c) * binom(2 * q, q - c)


def annulus_positive_total(p: int, q: int) -> int:
    """Partitions of the (p, q) poset with at least one connecting pair."""
    return _exact(
        Fraction(p * q, p + q) * binom(2 * p, p) * binom(2 * q, q)
    )


def annulus_total(p: int, q: int) -> int:
    """Size of the (p, q) poset: (p+q+pq)/(p+q) * C(2p,p) * C(2q,q)."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    return _exact(
        Fraction(p + q + p * q, p + q) * binom(2 * p, p) * binom(2 * q, q)
    )


class IntPolynomial:
    """Dense integer polynomial, stored low degree first without trailing zeros."""

    def __init__(self, coefficients=()):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            coeffs[k] += c
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)]
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __eq__(self, other):
        return (
            isinstance(other, IntPolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{k}" if c == 1 else f"{c}*x^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


def rank_gen(p: int, q: int) -> IntPolynomial:
    """Rank generating polynomial of the (p, q) poset, summed cell by cell."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    terms: dict[int, int] = {}
    for i in range(p + 1):
        for j in range(q + 1):
            terms[i + j] = terms.get(i + j, 0) + binom(p, i) ** 2 * binom(q, j) ** 2
    for c in range(1, min(p, q) + 1):
        for e in range(p - c + 1):
            for i in range(q - c + 1):
                k = p + q - e - i - c
                terms[k] = terms.get(k, 0) + annulus_cell_count(p, q, c, e, i)
    return IntPolynomial.from_dict(terms)


def rank_gen_compact(p: int, q: int) -> IntPolynomial:
    """Same polynomial with the connected part folded into a single double sum."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    terms: dict[int, Fraction] = {}
    for i in range(p + 1):
        for j in range(q + 1):
            terms[i + j] = (
                terms.get(i + j, Fraction(0)) + binom(p, i) ** 2 * binom(q, j) ** 2
            )
    scale = Fraction(2 * p * q, p + q)
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            weight = (
                binom(p, i) * binom(q, j - 1) + binom(p, i - 1) * binom(q, j)
            ) * binom(p - 1, i - 1) * binom(q - 1, j - 1)
            if weight:
                k = i + j - 1
                terms[k] = terms.get(k, Fraction(0)) + scale * weight
    return IntPolynomial.from_dict({k: _exact(Fraction(v)) for k, v in terms.items()})


def zeta_poly(p: int, q: int, m: int) -> int:
    """Multichain-count polynomial of the (p, q) poset at any integer m."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    total = gbinom(m * p, p) * gbinom(m * q, q)
    for c in range(1, p + 1):
        total += 2 * c * gbinom(m * p, p - c) * gbinom(m * q, q + c)
    return total


def zeta_poly_q1(n: int, m: int) -> int:
    """Multichain counts for shape (n-1, 1): (2 + mn/((m-1)(n-1))) C(m(n-1), n).

    Written with the factor (m-1)(n-1) cancelled against the falling
    factorial so that m = 1 is fine too.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    partial = 1
    for t in range(n - 1):
        partial *= m * (n - 1) - t
    # partial == (m(n-1))_(n-1); full falling factorial = partial * (m-1)(n-1)
    full = partial * ((n - 1) * (m - 1))
    return _exact(
        2 * Fraction(full, factorial(n)) + Fraction(m * n * partial, factorial(n))
    )


def max_chains(p: int, q: int) -> int:
    """Maximal chain count of the (p, q) poset."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    total = binom(p + q, p) * p**p * q**q
    for c in range(1, p + 1):
        total += 2 * c * binom(p + q, p - c) * p ** (p - c) * q ** (q + c)
    return total


def mobius_annulus(p: int, q: int) -> int:
    """Moebius value between bottom and top of the (p, q) poset."""
    if min(p, q) < 1:
        raise ValueError("circle sizes must be positive")
    total = binom(2 * p - 1, p) * binom(2 * q - 1, q)
    for c in range(1, p + 1):
        total += 2 * c * binom(2 * p - c - 1, p - 1) * binom(2 * q + c - 1, q - 1)
    return (-1) ** (p + q) * total


def mobius_q1(n: int) -> int:
    """Moebius value for shape (n-1, 1): (-1)^n C(2n-1, n) (5n-4)/(4n-2)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return _exact(
        (-1) ** n * Fraction(binom(2 * n - 1, n) * (5 * n - 4), 4 * n - 2)
    )


def multi3_total(n1: int, n2: int, n3: int) -> int:
    """Size of the three-circle poset, symmetric in the circle sizes."""
    if min(n1, n2, n3) < 1:
        raise ValueError("circle sizes must be positive")
    factor = (
        1
        + Fraction(n1 * n2, n1 + n2)
        + Fraction(n1 * n3, n1 + n3)
        + Fraction(n2 * n3, n2 + n3)
    )
    product = binom(2 * n1, n1) * binom(2 * n2, n2) * binom(2 * n3, n3)
    return _exact(factor * product)
