"""Exact integer number theory used by the enumeration formulas.

Divisor statistics, the congruence t^2 + t + 1 = 0 (mod n), continued
fractions and convergents, and billiard sequences scaled to integers.
Everything here is plain integer arithmetic; factorization is trial
division, which is ample for n up to about 10**6.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "Frac",
    "DivisorStats",
    "factorize",
    "divisor_stats",
    "sigma",
    "theta",
    "theta_star",
    "two_adic",
    "t_count",
    "k_count",
    "orbit1_vectors",
    "continued_fraction",
    "convergents",
    "convergent_pair",
    "billiard_sequence",
    "is_square_or_three_square",
]


class Frac(NamedTuple):
    """A fraction ``num/den`` kept exactly as given (never auto-reduced)."""

    num: int
    den: int

    def reduced(self) -> Frac:
        g = gcd(self.num, self.den)
        return Frac(self.num // g, self.den // g)


@dataclass(frozen=True)
class DivisorStats:
    n: int
    divisors: tuple[int, ...]

    @property
    def sigma(self) -> int:
        return sum(self.divisors)

    @property
    def theta(self) -> int:
        return len(self.divisors)


def _require_positive(n: int) -> None:
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``."""
    _require_positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisor_stats(n: int) -> DivisorStats:
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return DivisorStats(n, tuple(small + large[::-1]))


def sigma(n: int) -> int:
    return divisor_stats(n).sigma


def theta(n: int) -> int:
    return divisor_stats(n).theta


def two_adic(n: int) -> tuple[int, int]:
    """Split ``n`` as ``2**l * odd`` and return ``(l, odd)``."""
    _require_positive(n)
    l = 0
    while n % 2 == 0:
        n //= 2
        l += 1
    return l, n


def theta_star(n: int) -> int:
    """Divisor count of the part of ``n`` built from primes = 1 (mod 3).

    Zero when the power of 2, or the power of any prime = 2 (mod 3), is odd.
    Powers of 3 are ignored.
    """
    count = 1
    for p, e in factorize(n).items():
        if p % 3 == 2:  # includes p = 2
            if e % 2:
                return 0
        elif p % 3 == 1:
            count *= e + 1
    return count


def is_square_or_three_square(n: int) -> bool:
    """True when ``n = w**2`` or ``n = 3 * w**2`` for a positive integer ``w``."""
    _require_positive(n)
    r = isqrt(n)
    if r * r == n:
        return True
    if n % 3:
        return False
    r = isqrt(n // 3)
    return r * r * 3 == n


def t_count(n: int, mode: str = "brute") -> int:
    """Number of residues ``t`` mod ``n`` with ``t*t + t + 1 = 0 (mod n)``.

    ``mode="brute"`` scans all residues; ``mode="formula"`` uses the closed
    form: ``2**j`` when ``n = 3**a * p_1**e_1 ... p_j**e_j`` with ``a <= 1``
    and every ``p_i = 1 (mod 3)``, and 0 otherwise.
    """
    _require_positive(n)
    if mode == "brute":
        return sum(1 for t in range(n) if (t * t + t + 1) % n == 0)
    if mode == "formula":
        j = 0
        for p, e in factorize(n).items():
            if p == 3:
                if e > 1:
                    return 0
            elif p % 3 == 1:
                j += 1
            else:
                return 0
        return 2**j
    raise DomainError(f"unknown mode {mode!r}")


def k_count(n: int, mode: str = "paper") -> int:
    """Count ``0 <= k < n`` with two coprimality conditions, for odd ``n``.

    ``paper``: gcd(2k, n) = gcd(2k - 1, n) = 1.
    ``shifted``: gcd(k, n) = gcd(k + 1, n) = 1.
    The two counts coincide for odd ``n``.
    """
    _require_positive(n)
    if n % 2 == 0:
        raise DomainError(f"k_count needs odd n, got {n}")
    if mode == "paper":
        return sum(1 for k in range(n) if gcd(2 * k, n) == 1 and gcd(2 * k - 1, n) == 1)
    if mode == "shifted":
        return sum(1 for k in range(n) if gcd(k, n) == 1 and gcd(k + 1, n) == 1)
    raise DomainError(f"unknown mode {mode!r}")


def orbit1_vectors(n: int) -> set[tuple[int, int, int]]:
    """All ``(k, k*z, k*x)`` with ``k*k*z = n``, ``0 <= x < z`` and ``z | x*x + x + 1``.

    These are the candidates for one-element orbits at size ``n``.
    """
    _require_positive(n)
    out = set()
    for k in range(1, isqrt(n) + 1):
        if n % (k * k):
            continue
        z = n // (k * k)
        for x in range(z):
            if (x * x + x + 1) % z == 0:
                out.add((k, k * z, k * x))
    return out


def continued_fraction(s: int, m: int) -> list[int]:
    """Partial quotients ``[a_0; a_1, ..., a_r]`` of ``s/m`` (Euclid, last quotient >= 2)."""
    if m < 1 or s < 0:
        raise DomainError(f"need s >= 0 and m >= 1, got {s}/{m}")
    out = []
    while m:
        q, r = divmod(s, m)
        out.append(q)
        s, m = m, r
    return out


def convergents(s: int, m: int) -> list[Frac]:
    """Convergents ``p_i/q_i`` of ``s/m``, the last one equal to ``s/m`` reduced."""
    p_prev, q_prev, p, q = 1, 0, 0, 1
    out = []
    for i, a in enumerate(continued_fraction(s, m)):
        if i == 0:
            p, q = a, 1
            p_prev, q_prev = 1, 0
        else:
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
        out.append(Frac(p, q))
    return out


def convergent_pair(s: int, m: int) -> tuple[int, int, int]:
    """Return ``(a, b, d)`` where ``a/b`` is the last-but-one convergent of ``s/m``.

    ``d = a*m - b*s`` keeps its sign; ``|d| = gcd(s, m)``. For ``s = 0`` the
    degenerate value ``(1, 1, m)`` is returned.
    """
    if m < 1 or not 0 <= s < m:
        raise DomainError(f"need 0 <= s < m, got s={s}, m={m}")
    if s == 0:
        return 1, 1, m
    a, b = convergents(s, m)[-2]
    return a, b, a * m - b * s


def billiard_sequence(s: int, m: int) -> list[int]:
    """Billiard sequence of ``theta = s/m`` scaled by ``2m``.

    Entry ``j`` (1-based) is ``2m*F(j)``; ``F(1) = 0`` and consecutive sums are
    ``theta`` or ``1 + theta`` after odd ``j`` and ``0`` or ``1`` after even
    ``j``.  Length is ``m / gcd(s, m)``.
    """
    if not 0 < s < m:
        raise DomainError(f"need 0 < s < m, got s={s}, m={m}")
    length = m // gcd(s, m)
    two_m = 2 * m
    seq = [0]
    for j in range(1, length):
        target = 2 * s if j % 2 else 0
        seq.append((target - seq[-1]) % two_m)
    return seq
