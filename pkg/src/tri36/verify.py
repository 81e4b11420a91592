"""Invariant suites shared by the ``verify`` command and the test-suite.

Each check returns a :class:`CheckResult` carrying the first counterexample
found, so a failing run points straight at the offending input.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator

from . import enumerate as en
from . import numthy
from .errors import ConsistencyError, DomainError
from .ivec import IndexVector, code, is_akempic_arith, mirror, orbit, s_minus, successor
from .tri import (
    build,
    classify_edges,
    crossing_sequence,
    factor_structure,
    index_vectors_from_graph,
    is_akempic_bruteforce,
    is_isomorphic,
    iso_key,
    measure_classes,
    minimal_crossings,
    mirror_graph,
    nonsingular_coloring,
    s_values,
)
from .kernels import canonical_coloring

__all__ = ["CheckResult", "SUITES", "KEMPE_CAP", "run_suites", "proper_upto"]

log = logging.getLogger(__name__)

KEMPE_CAP = 7


@dataclass
class CheckResult:
    suite: str
    name: str
    checked: int = 0
    counterexample: object = None
    error: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.error is None

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "checked": self.checked, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.error is not None:
            out["error"] = self.error
        return out


def _run(suite: str, name: str, cases: Iterable, check: Callable) -> CheckResult:
    """Apply ``check`` to each case; a falsy result or exception stops the run."""
    res = CheckResult(suite, name)
    for case in cases:
        try:
            ok = check(case)
        except (ConsistencyError, DomainError, AssertionError) as exc:
            res.counterexample = _jsonable(case)
            res.error = f"{type(exc).__name__}: {exc}"
            break
        res.checked += 1
        if not ok:
            res.counterexample = _jsonable(case)
            break
    log.info("%s/%s: %s (%d cases)", suite, name, "pass" if res.passed else "FAIL", res.checked)
    return res


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def proper_upto(max_n: int) -> Iterator[IndexVector]:
    """Every proper vector with ``k*m <= max_n``, in increasing ``n``."""
    for n in range(2, max_n + 1):
        yield from en.proper_vectors(n).proper


# arithmetic ----------------------------------------------------------------


def _arith(max_n: int) -> list[CheckResult]:
    ns = range(1, max_n + 1)
    odd = range(1, max_n + 1, 2)
    s = "arith"

    def billiard_ok(sm):
        sv, m = sm
        seq = numthy.billiard_sequence(sv, m)
        d = gcd(sv, m)
        if sorted(seq) != list(range(0, 2 * m, 2 * d)):
            return False
        if (sv // d) % 2 == 0:
            last = sv
        elif (m // d) % 2 == 0:
            last = m
        else:
            last = sv + m
        if seq[-1] != last:
            return False
        a, b, dd = numthy.convergent_pair(sv, m)
        if a % 2 == 0:
            mid = sv + dd
        elif b % 2 == 0:
            mid = m - dd
        else:
            mid = sv + m + dd
        return seq[b - 1] == mid % (2 * m)

    def orbit_ok(v):
        o = orbit(v)
        if len(o) not in (1, 3) or successor(o.vectors[-1]) != o.vectors[0]:
            return False
        return mirror(mirror(v)) == v and o.vectors[0] == min(o.vectors)

    pairs = [(sv, m) for m in range(2, max_n + 1) for sv in range(1, m)]
    return [
        _run(s, "d formula = partition", ns, lambda n: en.d_count(n, "formula") == en.d_count(n, "partition")),
        _run(s, "a formula = partition (odd n)", odd, lambda n: en.a_count(n, "formula") == en.a_count(n, "partition")),
        _run(
            s,
            "symmetric formula = partition (n >= 2)",
            range(2, max_n + 1),
            lambda n: en.symmetric_count(n, "formula") == en.symmetric_count(n, "partition"),
        ),
        _run(
            s,
            "order histogram formula = partition",
            ns,
            lambda n: en.order_histogram(n, "formula") == en.order_histogram(n, "partition"),
        ),
        _run(s, "t(n) brute = formula", ns, lambda n: numthy.t_count(n, "brute") == numthy.t_count(n, "formula")),
        _run(s, "k(n) two gcd forms agree (odd n)", odd, lambda n: numthy.k_count(n, "paper") == numthy.k_count(n, "shifted")),
        _run(s, "orbits are successor cycles of length 1 or 3", proper_upto(max_n), orbit_ok),
        _run(s, "billiard sequence properties", pairs, billiard_ok),
    ]


# graphs --------------------------------------------------------------------


def _anchored(g):
    return classify_edges(g, nonsingular_coloring(g), 0, g.rotation[0][0])


def _graph(max_n: int) -> list[CheckResult]:
    s = "graph"
    vs = list(proper_upto(max_n))
    graphs: dict[IndexVector, object] = {}

    def get(v):
        if v not in graphs:
            graphs[v] = build(v)
        return graphs[v]

    def round_trip(v):
        g = get(v)
        o = orbit(v).vectors
        i = o.index(v)
        expected = o[i:] + o[:i] if len(o) == 3 else o * 3
        return (
            not g.validation_errors()
            and g.vertex_count == 2 * v.k * v.m + 2
            and list(index_vectors_from_graph(g, 0, g.rotation[0][0])) == list(expected)
        )

    def local_rule(v):
        g = get(v)
        ec = _anchored(g)
        return all(
            ec.of(u, r[(i + 1) % len(r)]) == (ec.of(u, w) + 1) % 3
            for u, r in enumerate(g.rotation)
            for i, w in enumerate(r)
        )

    def s_gap(v):
        return all(
            (cm.s_minus - cm.s_plus - cm.k) % cm.m == 0 and cm.s_minus == s_minus(cm.vector)
            for cm in measure_classes(get(v), 0, get(v).rotation[0][0])
        )

    def billiard_link(v):
        g = get(v)
        ec = _anchored(g)
        for q, cm in enumerate(measure_classes(g, 0, g.rotation[0][0])):
            if cm.s_plus == 0:
                continue
            seq = crossing_sequence(g, ec, q)
            if seq != numthy.billiard_sequence(cm.s_plus, cm.m):
                return False
            if len(seq) != cm.m // gcd(cm.s_plus, cm.m):
                return False
        return True

    def crossing_congruence(v):
        g = get(v)
        ec = _anchored(g)
        for q in range(3):
            fs = factor_structure(g, ec, q)
            two_m = 2 * fs.m
            for a_end in (fs.paths[0].start, fs.paths[0].end):
                for c_end in (fs.paths[1].start, fs.paths[1].end):
                    sums = {(x + y) % two_m for x, y in minimal_crossings(g, ec, q, a_end, c_end)}
                    if len(sums) > 1:
                        return False
        return True

    def ends_independent(v):
        g = get(v)
        ec = _anchored(g)
        for q in range(3):
            fs = factor_structure(g, ec, q)
            base = s_values(g, ec, q)
            for p0, p1 in ((0, 1), (1, 0)):
                for a_end in (fs.paths[p0].start, fs.paths[p0].end):
                    for c_end in (fs.paths[p1].start, fs.paths[p1].end):
                        if s_values(g, ec, q, a_end, c_end) != base:
                            return False
        return True

    def mirror_orbit(v):
        h = mirror_graph(get(v))
        return set(index_vectors_from_graph(h)) == set(orbit(mirror(v)).vectors)

    def coloring_unique(v):
        g = get(v)
        ref = canonical_coloring(bytes(nonsingular_coloring(g).colors))
        return all(
            canonical_coloring(bytes(nonsingular_coloring(g, (a, b)).colors)) == ref
            for a, r in enumerate(g.rotation)
            for b in r[:1]
        )

    iso_vs = [v for v in vs if v.k * v.m <= min(max_n, 12)]

    def iso_vs_code(u):
        ku = iso_key(get(u))
        cu = code(u)
        return all((iso_key(get(w)) == ku) == (w in cu) for w in iso_vs if w.n == u.n)

    def orientation(u):
        g = get(u)
        ou = orbit(u)
        return all(is_isomorphic(g, get(w), orientation_preserving=True) == (w in ou) for w in iso_vs if w.n == u.n)

    return [
        _run(s, "builder round-trip", vs, round_trip),
        _run(s, "successive classes around every vertex", vs, local_rule),
        _run(s, "S- - S+ = K (mod M)", vs, s_gap),
        _run(s, "crossing indices follow the billiard sequence", vs, billiard_link),
        _run(s, "minimal crossing sums agree mod 2M", vs, crossing_congruence),
        _run(s, "S+ and S- independent of path ends", vs, ends_independent),
        _run(s, "mirror graph carries the mirror orbit", vs, mirror_orbit),
        _run(s, "nonsingular coloring unique", vs, coloring_unique),
        _run(s, "isomorphic iff same code", iso_vs, iso_vs_code),
        _run(s, "orientation-preserving isomorphic iff same orbit", iso_vs, orientation),
    ]


# kempe ---------------------------------------------------------------------


def _kempe(max_n: int) -> list[CheckResult]:
    vs = proper_upto(min(max_n, KEMPE_CAP))
    return [
        _run("kempe", "Kempe closure trivial iff arithmetic criterion", vs,
             lambda v: is_akempic_bruteforce(build(v)) == is_akempic_arith(v)),
    ]


SUITES: dict[str, Callable[[int], list[CheckResult]]] = {"arith": _arith, "graph": _graph, "kempe": _kempe}


def run_suites(max_n: int, suites: Iterable[str]) -> list[CheckResult]:
    if max_n < 1:
        raise DomainError(f"max_n must be at least 1, got {max_n}")
    suites = list(suites)
    unknown = [x for x in suites if x not in SUITES]
    if unknown:
        raise DomainError(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    out: list[CheckResult] = []
    for name in suites:
        out.extend(SUITES[name](max_n))
    return out
