"""Index-vector algebra.

An index vector ``(k, m, s)`` records the layer count, the class-path
length and the exterior-path position of one drawing of a triangulation.
The successor map computes the vector of the next edge class from the
current one using gcds and continued-fraction convergents; iterating it
gives orbits of size 1 or 3, and adding the mirror images gives codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

from . import numthy
from .errors import ConsistencyError, DomainError

__all__ = [
    "IndexVector",
    "Orbit",
    "Code",
    "check_vector",
    "improper_form",
    "is_proper",
    "s_minus",
    "successor",
    "mirror",
    "orbit",
    "code",
    "is_akempic_arith",
]


class IndexVector(NamedTuple):
    k: int
    m: int
    s: int

    @property
    def n(self) -> int:
        return self.k * self.m

    def to_json(self) -> list[int]:
        return [self.k, self.m, self.s]


def check_vector(v) -> IndexVector:
    """Coerce ``v`` to an :class:`IndexVector`, rejecting malformed triples."""
    try:
        k, m, s = (int(x) for x in v)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not an index vector: {v!r}") from exc
    if k < 1 or m < 1 or not 0 <= s < m:
        raise DomainError(f"index vector needs k, m >= 1 and 0 <= s < m, got {(k, m, s)}")
    return IndexVector(k, m, s)


def improper_form(v, n: int | None = None) -> str | None:
    """Name of the non-simple form that ``v`` matches, or ``None`` if proper."""
    v = check_vector(v)
    if n is None:
        n = v.n
    elif v.n != n:
        raise DomainError(f"{tuple(v)} has k*m = {v.n}, not {n}")
    if n == 1:
        return None
    if v == (n, 1, 0):
        return "(n,1,0)"
    if v == (1, n, n - 1):
        return "(1,n,n-1)"
    if v == (1, n, 0):
        return "(1,n,0)"
    return None


def is_proper(v, n: int) -> bool:
    return improper_form(v, n) is None


def s_minus(v) -> int:
    """The value in ``(0, m]`` congruent to ``s + k`` mod ``m``."""
    k, m, s = check_vector(v)
    return (s + k - 1) % m + 1


def successor(v) -> IndexVector:
    """Index vector of the next edge class."""
    k, m, s = check_vector(v)
    k_next = gcd(s, m)  # gcd(0, m) = m
    m_next = k * m // k_next
    _, b, d = numthy.convergent_pair(s, m)
    if d > 0:
        s_next = (b * k - k_next) % m_next
    else:
        s_next = (-b * k - k_next) % m_next
    return IndexVector(k_next, m_next, s_next)


def mirror(v) -> IndexVector:
    """Index vector of the same drawing reflected: ``(k, m, m - s_minus)``."""
    v = check_vector(v)
    return IndexVector(v.k, v.m, v.m - s_minus(v))


@dataclass(frozen=True)
class Orbit:
    """Successor cycle, starting from its lexicographically least vector."""

    vectors: tuple[IndexVector, ...]

    def __iter__(self) -> Iterator[IndexVector]:
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.vectors

    def as_set(self) -> frozenset[IndexVector]:
        return frozenset(self.vectors)

    def to_json(self) -> list[list[int]]:
        return [v.to_json() for v in self.vectors]


@dataclass(frozen=True)
class Code:
    """Union of an orbit and its mirror orbit, stored sorted."""

    vectors: tuple[IndexVector, ...]

    def __iter__(self) -> Iterator[IndexVector]:
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.vectors

    @property
    def order(self) -> int:
        return len(self.vectors)

    @property
    def symmetric(self) -> bool:
        return self.order in (1, 3)

    def as_set(self) -> frozenset[IndexVector]:
        return frozenset(self.vectors)

    def to_json(self) -> list[list[int]]:
        return [v.to_json() for v in self.vectors]


def orbit(v) -> Orbit:
    v = check_vector(v)
    cycle = [v]
    w = successor(v)
    while w != v:
        cycle.append(w)
        if len(cycle) > 3:
            raise ConsistencyError(f"successor orbit of {tuple(v)} exceeds length 3")
        w = successor(w)
    if len(cycle) not in (1, 3):
        raise ConsistencyError(f"successor orbit of {tuple(v)} has length {len(cycle)}")
    start = cycle.index(min(cycle))
    return Orbit(tuple(cycle[start:] + cycle[:start]))


def code(v) -> Code:
    v = check_vector(v)
    vectors = orbit(v).as_set() | orbit(mirror(v)).as_set()
    if len(vectors) not in (1, 2, 3, 6):
        raise ConsistencyError(f"code of {tuple(v)} has {len(vectors)} elements")
    return Code(tuple(sorted(vectors)))


def is_akempic_arith(v) -> bool:
    """Arithmetic akempic test.

    For ``k = 1`` this is ``gcd(s, m) = gcd(s + 1, m) = 1``; otherwise it
    reduces to "every vector in the orbit has ``k = 1``", which fails at
    ``v`` itself.
    """
    v = check_vector(v)
    if v.k == 1:
        return gcd(v.s, v.m) == 1 and gcd(v.s + 1, v.m) == 1
    return all(w.k == 1 for w in orbit(v))
