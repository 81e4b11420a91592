"""Rotation systems for plane triangulations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import DomainError

__all__ = ["PlaneTriangulation", "rotation_from_faces"]


@dataclass(frozen=True)
class PlaneTriangulation:
    """A triangulation of the sphere given by counter-clockwise neighbour lists.

    ``rotation[v]`` lists the neighbours of ``v`` in counter-clockwise order.
    Faces are never stored; the face to the left of the dart ``a -> b`` is
    ``(a, b, succ(a, b))``.
    """

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(int(x) for x in r) for r in self.rotation))

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    def succ(self, v: int, w: int) -> int:
        """Neighbour following ``w`` counter-clockwise around ``v``."""
        r = self.rotation[v]
        return r[(self._pos[v][w] + 1) % len(r)]

    def pred(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][w] - 1) % len(r)]

    def adjacent(self, v: int, w: int) -> bool:
        return w in self._pos[v]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(v, w), max(v, w)) for v, r in enumerate(self.rotation) for w in r})

    def faces(self) -> list[tuple[int, int, int]]:
        """Counter-clockwise triangles, each listed once from its least vertex."""
        out = set()
        for a, r in enumerate(self.rotation):
            for b in r:
                c = self.succ(a, b)
                tri = (a, b, c)
                i = tri.index(min(tri))
                out.add(tri[i:] + tri[:i])
        return sorted(out)

    def degree3_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self.rotation) if len(r) == 3]

    def csr(self) -> tuple[list[int], list[int]]:
        offsets, nbrs = [0], []
        for r in self.rotation:
            nbrs.extend(r)
            offsets.append(len(nbrs))
        return offsets, nbrs

    def rotated(self, v: int, first: int) -> PlaneTriangulation:
        """Same embedding with ``rotation[v]`` restarted at ``first``."""
        r = self.rotation[v]
        i = r.index(first)
        rot = list(self.rotation)
        rot[v] = r[i:] + r[:i]
        return PlaneTriangulation(tuple(rot))

    def relabeled(self, perm: Sequence[int]) -> PlaneTriangulation:
        """Vertex ``v`` becomes ``perm[v]``; rotation lists keep their start."""
        rot: list[tuple[int, ...]] = [()] * self.vertex_count
        for v, r in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[w] for w in r)
        return PlaneTriangulation(tuple(rot))

    def validation_errors(self, degrees36: bool = True) -> list[str]:
        errs = []
        n = self.vertex_count
        if n < 4:
            return [f"a triangulation needs at least 4 vertices, got {n}"]
        for v, r in enumerate(self.rotation):
            if len(set(r)) != len(r):
                errs.append(f"vertex {v} lists a neighbour twice")
            for w in r:
                if not 0 <= w < n:
                    errs.append(f"vertex {v} lists unknown vertex {w}")
                elif w == v:
                    errs.append(f"loop at vertex {v}")
                elif v not in self.rotation[w]:
                    errs.append(f"edge {v}-{w} is not symmetric")
        if errs:
            return errs
        for a, r in enumerate(self.rotation):
            for b in r:
                c = self.succ(a, b)
                if self.succ(b, c) != a or self.succ(c, a) != b:
                    errs.append(f"face at dart {a}->{b} is not a triangle")
        e = len(self.edges())
        f = len(self.faces())
        if not errs and n - e + f != 2:
            errs.append(f"Euler characteristic V-E+F = {n - e + f}, expected 2")
        seen, stack = {0}, [0]
        while stack:
            for w in self.rotation[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            errs.append("graph is disconnected")
        if degrees36:
            bad = [v for v, r in enumerate(self.rotation) if len(r) not in (3, 6)]
            if bad:
                errs.append(f"vertices {bad[:5]} have degree other than 3 or 6")
            elif len(self.degree3_vertices()) != 4:
                errs.append("expected exactly four vertices of degree 3")
        return errs

    def validate(self, degrees36: bool = True) -> PlaneTriangulation:
        errs = self.validation_errors(degrees36)
        if errs:
            raise DomainError("invalid triangulation: " + "; ".join(errs))
        return self

    def mirror(self) -> PlaneTriangulation:
        return PlaneTriangulation(tuple(tuple(reversed(r)) for r in self.rotation))

    def to_dict(self) -> dict:
        return {"n_vertices": self.vertex_count, "rotation": [list(r) for r in self.rotation]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, degrees36: bool = True) -> PlaneTriangulation:
        try:
            rotation = data["rotation"]
            n = int(data["n_vertices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed graph document: {exc}") from exc
        if len(rotation) != n:
            raise DomainError(f"n_vertices={n} but {len(rotation)} rotation lists")
        return cls(tuple(tuple(r) for r in rotation)).validate(degrees36)

    @classmethod
    def from_json(cls, text: str, degrees36: bool = True) -> PlaneTriangulation:
        return cls.from_dict(json.loads(text), degrees36)

    def edge_list_json(self) -> str:
        return json.dumps([list(e) for e in self.edges()])


def rotation_from_faces(
    n_vertices: int, faces: Iterable[tuple[int, int, int]], first: dict[int, int] | None = None
) -> PlaneTriangulation | None:
    """Assemble a rotation system from consistently oriented triangles.

    Returns ``None`` when the faces do not describe a simple triangulated
    sphere (repeated vertex in a face, parallel edges, or a vertex whose
    link is not a single cycle).  ``first`` fixes where chosen vertices'
    rotation lists start; the rest start at their least neighbour.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n_vertices)]
    for a, b, c in faces:
        if a == b or b == c or a == c:
            return None
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if y in succ[x]:
                return None
            succ[x][y] = z
    first = first or {}
    rot = []
    for v in range(n_vertices):
        s = succ[v]
        if not s or set(s.values()) != set(s):
            return None
        start = first.get(v, min(s))
        if start not in s:
            return None
        cycle = [start]
        w = s[start]
        while w != start:
            cycle.append(w)
            w = s[w]
        if len(cycle) != len(s):
            return None
        rot.append(tuple(cycle))
    g = PlaneTriangulation(tuple(rot))
    if g.validation_errors(degrees36=False):
        return None
    return g
