"""Counting triangulations of order 2n + 2 with vertex degrees 3 and 6.

Every count comes in two flavours.  ``formula`` evaluates a closed form in
terms of divisor statistics; ``partition`` enumerates the proper index
vectors, splits them into codes, and counts codes directly.  The partition
route is the reference; the formulas are what gets checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import ivec, numthy
from .errors import ConsistencyError, DomainError
from .ivec import Code, IndexVector, Orbit

__all__ = [
    "VectorUniverse",
    "CodePartition",
    "all_vectors",
    "proper_vectors",
    "codes_partition",
    "d_count",
    "a_count",
    "symmetric_count",
    "order_histogram",
    "nonsimple_code",
    "akempic_symmetric_orbit",
    "count_table",
]

ORDERS = (1, 2, 3, 6)


@dataclass(frozen=True)
class VectorUniverse:
    n: int
    proper: tuple[IndexVector, ...]


@dataclass(frozen=True)
class CodePartition:
    n: int
    codes: tuple[Code, ...]


def _positive(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


def _exact_div(num: int, den: int, what: str, n: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what} for n={n}: {num}/{den} is not an integer")
    return q


def all_vectors(n: int) -> list[IndexVector]:
    """Every ``(k, m, s)`` with ``k*m = n`` and ``0 <= s < m``, sorted."""
    _positive(n)
    out = []
    for m in numthy.divisor_stats(n).divisors:
        out.extend(IndexVector(n // m, m, s) for s in range(m))
    return sorted(out)


def proper_vectors(n: int) -> VectorUniverse:
    return VectorUniverse(n, tuple(v for v in all_vectors(n) if ivec.is_proper(v, n)))


@lru_cache(maxsize=None)
def codes_partition(n: int) -> CodePartition:
    remaining = set(proper_vectors(n).proper)
    codes = []
    while remaining:
        c = ivec.code(min(remaining))
        if not c.as_set() <= remaining:
            raise ConsistencyError(f"code {c.to_json()} overlaps an earlier code or leaves X_{n}")
        remaining -= c.as_set()
        codes.append(c)
    return CodePartition(n, tuple(codes))


def _pick(mode: str, formula, partition):
    if mode == "formula":
        return formula()
    if mode == "partition":
        return partition()
    raise DomainError(f"unknown mode {mode!r}")


def _d_formula(n: int) -> int:
    if n == 1:
        return 1
    st = numthy.divisor_stats(n)
    l, odd = numthy.two_adic(n)
    ts = numthy.theta_star(n)
    if l == 0:
        num = st.sigma + 3 * st.theta + 2 * ts
    else:
        num = st.sigma + 3 * (2 * l - 1) * numthy.theta(odd) + 2 * ts
    return _exact_div(num, 6, "d(n)", n) - 1


def d_count(n: int, mode: str = "formula") -> int:
    """Number of non-isomorphic triangulations with ``2n + 2`` vertices."""
    _positive(n)
    return _pick(mode, lambda: _d_formula(n), lambda: len(codes_partition(n).codes))


def _require_odd(n: int) -> None:
    _positive(n)
    if n % 2 == 0:
        raise DomainError(f"akempic count is only defined for odd n, got {n}")


def a_count(n: int, mode: str = "formula") -> int:
    """Number of akempic triangulations with ``2n + 2`` vertices (odd ``n``)."""
    _require_odd(n)

    def formula():
        num = numthy.k_count(n, "paper") + 2 * numthy.t_count(n, "formula") + 3
        return _exact_div(num, 6, "a(n)", n)

    def partition():
        return sum(
            1 for c in codes_partition(n).codes if all(ivec.is_akempic_arith(v) for v in c)
        )

    return _pick(mode, formula, partition)


def _symmetric_formula(n: int) -> int:
    if n < 2:
        raise DomainError("the symmetric-count formula needs n >= 2")
    l, odd = numthy.two_adic(n)
    if l == 0:
        return numthy.theta(n) - 1
    return (2 * l - 1) * numthy.theta(odd) - 1


def symmetric_count(n: int, mode: str = "formula") -> int:
    """Number of triangulations isomorphic to their mirror image."""
    _positive(n)
    return _pick(
        mode,
        lambda: _symmetric_formula(n),
        lambda: sum(1 for c in codes_partition(n).codes if c.symmetric),
    )


def _histogram_formula(n: int) -> dict[int, int]:
    if n == 1:
        return {1: 1, 2: 0, 3: 0, 6: 0}
    h1 = 1 if numthy.is_square_or_three_square(n) else 0
    h2 = _exact_div(numthy.theta_star(n) - h1, 2, "order-2 code count", n)
    h3 = _symmetric_formula(n) - h1
    rest = numthy.sigma(n) - 3 - h1 - 2 * h2 - 3 * h3
    h6 = _exact_div(rest, 6, "order-6 code count", n)
    return {1: h1, 2: h2, 3: h3, 6: h6}


def order_histogram(n: int, mode: str = "partition") -> dict[int, int]:
    """Number of codes of each order 1, 2, 3, 6."""
    _positive(n)

    def partition():
        hist = dict.fromkeys(ORDERS, 0)
        for c in codes_partition(n).codes:
            hist[c.order] += 1
        return hist

    return _pick(mode, lambda: _histogram_formula(n), partition)


def nonsimple_code(n: int) -> Code:
    """The improper 3-element code marking the non-simple triangulation."""
    _positive(n)
    if n == 1:
        raise DomainError("there is no non-simple triangulation for n = 1")
    return Code(tuple(sorted({IndexVector(n, 1, 0), IndexVector(1, n, n - 1), IndexVector(1, n, 0)})))


def akempic_symmetric_orbit(n: int) -> Orbit:
    """Orbit ``{(1,n,(n-1)/2), (1,n,1), (1,n,n-2)}`` of the unique akempic symmetric one."""
    _positive(n)
    if n % 2 == 0 or n == 1:
        raise DomainError(f"need odd n > 1, got {n}")
    expected = {IndexVector(1, n, (n - 1) // 2), IndexVector(1, n, 1), IndexVector(1, n, n - 2)}
    orb = ivec.orbit(IndexVector(1, n, (n - 1) // 2))
    if orb.as_set() != expected:
        raise ConsistencyError(f"orbit of (1,{n},{(n - 1) // 2}) is {orb.to_json()}")
    return orb


def count_table(ns, what: str, mode: str) -> list[dict]:
    """Rows for the ``count`` command: one dict per ``n``.

    With ``mode="both"`` each row carries ``formula``, ``partition`` and
    ``match``; otherwise a single column named after ``what``.
    """
    funcs = {
        "d": d_count,
        "a": a_count,
        "symmetric": symmetric_count,
        "histogram": order_histogram,
    }
    if what not in funcs:
        raise DomainError(f"unknown table {what!r}")
    fn = funcs[what]
    if what == "a":
        for n in ns:
            _require_odd(n)
    rows = []
    for n in ns:
        if mode == "both":
            f, p = fn(n, "formula"), fn(n, "partition")
            rows.append({"n": n, "formula": f, "partition": p, "match": f == p})
        else:
            rows.append({"n": n, what: fn(n, mode)})
    return rows
