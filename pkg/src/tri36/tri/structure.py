"""Class paths, branch indices and index vectors measured on the graph itself.

Nothing here uses the successor arithmetic; the vectors come straight from
the combinatorics of the rotation system, which is what lets them serve as
ground truth for the arithmetic layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError, DomainError
from ..ivec import IndexVector
from .coloring import EdgeClassification, classify_edges, default_anchor, nonsingular_coloring
from .graph import PlaneTriangulation

__all__ = [
    "DirectedClassPath",
    "FactorStructure",
    "ClassMeasure",
    "directed_path",
    "factor_structure",
    "branch_side",
    "branch_index",
    "first_adjacent",
    "s_values",
    "measure_classes",
    "index_vectors_from_graph",
    "crossing_sequence",
    "minimal_crossings",
]


@dataclass(frozen=True)
class DirectedClassPath:
    vertices: tuple[int, ...]
    cls: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> DirectedClassPath:
        return DirectedClassPath(self.vertices[::-1], self.cls)

    def index_of(self, v: int) -> int | None:
        try:
            return self.vertices.index(v)
        except ValueError:
            return None


@dataclass(frozen=True)
class FactorStructure:
    cls: int
    paths: tuple[DirectedClassPath, DirectedClassPath]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cycles) + 1

    @property
    def m(self) -> int:
        return self.paths[0].length


@dataclass(frozen=True)
class ClassMeasure:
    cls: int
    k: int
    m: int
    s_plus: int
    s_minus: int

    @property
    def vector(self) -> IndexVector:
        return IndexVector(self.k, self.m, self.s_plus)


def directed_path(g: PlaneTriangulation, ec: EdgeClassification, q: int, start: int) -> DirectedClassPath:
    """The maximal class-``q`` path leaving the degree-3 vertex ``start``."""
    if g.degree(start) != 3:
        raise DomainError(f"class paths start at degree-3 vertices; {start} has degree {g.degree(start)}")
    verts = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in ec.class_neighbors(g, cur, q) if w != prev]
        if cur != start and g.degree(cur) == 3:
            break
        if len(nxt) != 1:
            raise ConsistencyError(f"class-{q} path through {cur} does not continue uniquely")
        prev, cur = cur, nxt[0]
        if cur in verts:
            raise ConsistencyError(f"class-{q} walk from {start} closed into a cycle")
        verts.append(cur)
    return DirectedClassPath(tuple(verts), q)


def factor_structure(g: PlaneTriangulation, ec: EdgeClassification, q: int) -> FactorStructure:
    """Split class ``q`` into its two maximal paths and its cycles."""
    seen: set[int] = set()
    paths = []
    for v in g.degree3_vertices():
        if v in seen:
            continue
        p = directed_path(g, ec, q, v)
        seen.update(p.vertices)
        paths.append(p)
    cycles = []
    for v in range(g.vertex_count):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        prev, cur = None, v
        while True:
            nbrs = ec.class_neighbors(g, cur, q)
            if len(nbrs) != 2:
                raise ConsistencyError(f"vertex {cur} has {len(nbrs)} class-{q} edges off the paths")
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            if nxt == v:
                break
            prev, cur = cur, nxt
            cyc.append(cur)
            seen.add(cur)
        cycles.append(tuple(cyc))
    if len(paths) != 2:
        raise ConsistencyError(f"class {q} has {len(paths)} maximal paths, expected 2")
    m = paths[0].length
    if paths[1].length != m:
        raise ConsistencyError(f"class-{q} paths have lengths {paths[0].length} and {paths[1].length}")
    if any(len(c) != 2 * m for c in cycles):
        raise ConsistencyError(f"class-{q} cycles are not all of length {2 * m}")
    if 2 * (len(cycles) + 1) * m + 2 != g.vertex_count:
        raise ConsistencyError(f"class {q}: 2KM+2 != vertex count")
    return FactorStructure(q, (paths[0], paths[1]), tuple(cycles))


def branch_side(g: PlaneTriangulation, p: DirectedClassPath, i: int, w: int) -> str:
    """``"left"`` or ``"right"`` for the edge from ``p.vertices[i]`` to ``w``.

    Left means the edge is the counter-clockwise successor of the outgoing
    path edge, or the counter-clockwise predecessor of the incoming one.
    """
    v = p.vertices[i]
    if not g.adjacent(v, w):
        raise DomainError(f"{v}-{w} is not an edge")
    if w in (p.vertices[i - 1] if i > 0 else None, p.vertices[i + 1] if i < p.length else None):
        raise DomainError(f"{v}-{w} is an edge of the path itself")
    if i < p.length and g.succ(v, p.vertices[i + 1]) == w:
        return "left"
    if i > 0 and g.pred(v, p.vertices[i - 1]) == w:
        return "left"
    return "right"


def branch_index(g: PlaneTriangulation, p: DirectedClassPath, e: tuple[int, int]) -> int:
    """Position of a branch edge along ``p``: ``i`` on the left, ``2M - i`` on the right (mod ``2M``)."""
    x, y = e
    ix, iy = p.index_of(x), p.index_of(y)
    if ix is not None and iy is not None:
        raise DomainError(f"edge {e} has both ends on the path")
    if ix is None and iy is None:
        raise DomainError(f"edge {e} is not adjacent to the path")
    i, w = (ix, y) if ix is not None else (iy, x)
    two_m = 2 * p.length
    if branch_side(g, p, i, w) == "left":
        return i % two_m
    return (two_m - i) % two_m


def first_adjacent(g: PlaneTriangulation, walker: DirectedClassPath, target: DirectedClassPath):
    """First edge of ``walker`` touching ``target``: ``(i, w)`` with ``target[i]`` the contact."""
    for t in range(walker.length):
        u, u_next = walker.vertices[t], walker.vertices[t + 1]
        iu, inext = target.index_of(u), target.index_of(u_next)
        if iu is not None and inext is not None:
            raise ConsistencyError("class path edge joins two vertices of another class path")
        if iu is not None:
            return iu, u_next
        if inext is not None:
            return inext, u
    raise ConsistencyError("class path never meets the target path")


def _position(g, target: DirectedClassPath, i: int, w: int) -> int:
    return i if branch_side(g, target, i, w) == "left" else target.length - i


def s_values(
    g: PlaneTriangulation,
    ec: EdgeClassification,
    q: int,
    a_end: int | None = None,
    c_end: int | None = None,
) -> tuple[int, int]:
    """``(S+, S-)`` of class ``q`` measured from path ends ``a_end`` and ``c_end``.

    ``a_end`` defaults to the anchor and ``c_end`` to the smaller end of the
    other class-``q`` path.
    """
    if a_end is None:
        a_end = ec.anchor
    path_a = directed_path(g, ec, q, a_end)
    if c_end is None:
        other = [v for v in g.degree3_vertices() if v not in path_a.vertices]
        c_end = min(other)
    elif c_end in path_a.vertices:
        raise DomainError(f"{c_end} lies on the same class-{q} path as {a_end}")
    up = directed_path(g, ec, (q + 1) % 3, c_end)
    down = directed_path(g, ec, (q - 1) % 3, c_end)
    s_plus = _position(g, path_a, *first_adjacent(g, up, path_a))
    s_minus = _position(g, path_a, *first_adjacent(g, down, path_a))
    return s_plus, s_minus


def measure_classes(
    g: PlaneTriangulation, anchor: int | None = None, g0: int | None = None
) -> tuple[ClassMeasure, ClassMeasure, ClassMeasure]:
    """``(K, M, S+, S-)`` for each class, in class order."""
    if anchor is None:
        anchor = default_anchor(g)
    ec = classify_edges(g, nonsingular_coloring(g), anchor, g0)
    return _measure(g, ec)


def _measure(g, ec):
    out = []
    for q in range(3):
        fs = factor_structure(g, ec, q)
        s_plus, s_minus = s_values(g, ec, q)
        if not 0 <= s_plus < fs.m or not 0 < s_minus <= fs.m:
            raise ConsistencyError(f"class {q}: S+={s_plus}, S-={s_minus} out of range for M={fs.m}")
        out.append(ClassMeasure(q, fs.k, fs.m, s_plus, s_minus))
    return tuple(out)


def index_vectors_from_graph(
    g: PlaneTriangulation, anchor: int | None = None, g0: int | None = None
) -> tuple[IndexVector, IndexVector, IndexVector]:
    return tuple(cm.vector for cm in measure_classes(g, anchor, g0))


def crossing_sequence(g: PlaneTriangulation, ec: EdgeClassification, q: int, a_end: int | None = None) -> list[int]:
    """Branch indices along ``[A, q]`` of the edges of ``[A, q+1]`` that touch it, in order."""
    if a_end is None:
        a_end = ec.anchor
    path_a = directed_path(g, ec, q, a_end)
    walker = directed_path(g, ec, (q + 1) % 3, a_end)
    out = []
    for t in range(walker.length):
        e = (walker.vertices[t], walker.vertices[t + 1])
        if path_a.index_of(e[0]) is not None or path_a.index_of(e[1]) is not None:
            out.append(branch_index(g, path_a, e))
    return out


def minimal_crossings(
    g: PlaneTriangulation, ec: EdgeClassification, q: int, a_end: int, c_end: int
) -> list[tuple[int, int]]:
    """``([A,q](e), [C,q](e_hat))`` for every class-``(q+1)`` segment joining the two paths.

    A segment leaves ``[A, q]`` along edge ``e``, avoids both paths in its
    interior and arrives at ``[C, q]`` along ``e_hat``.
    """
    q1 = (q + 1) % 3
    path_a = directed_path(g, ec, q, a_end)
    path_c = directed_path(g, ec, q, c_end)
    on_a, on_c = set(path_a.vertices), set(path_c.vertices)
    out = []
    for v in path_a.vertices:
        for w in ec.class_neighbors(g, v, q1):
            prev, cur = v, w
            while cur not in on_a and cur not in on_c:
                nxt = [x for x in ec.class_neighbors(g, cur, q1) if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            if cur in on_c:
                out.append((branch_index(g, path_a, (v, w)), branch_index(g, path_c, (prev, cur))))
    return out
