"""Pure-Python hot kernels; reference behaviour for the compiled module.

Graphs arrive in CSR form: ``offsets`` has ``V + 1`` entries and the
neighbours of ``v`` (in rotation order) are ``nbrs[offsets[v]:offsets[v+1]]``.
Colorings are ``bytes`` of length ``V`` with values 0..3.
"""

from __future__ import annotations

__all__ = ["canonical_code", "canonical_coloring", "kempe_neighbors"]

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _code_from(offsets, nbrs, u: int, v: int, reflect: bool, best):
    """Rotation-respecting BFS code from directed edge ``u -> v``.

    Returns ``None`` as soon as the code exceeds ``best`` lexicographically.
    """
    n = len(offsets) - 1
    label = [-1] * n
    first = [0] * n
    label[u] = 0
    first[u] = v
    order = [u]
    nxt = 1
    code = []
    pos = 0
    tight = best is not None
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        lo, hi = offsets[x], offsets[x + 1]
        deg = hi - lo
        start = lo
        while nbrs[start] != first[x]:
            start += 1
        i = start - lo
        for step in range(deg):
            j = (i - step) % deg if reflect else (i + step) % deg
            y = nbrs[lo + j]
            if label[y] < 0:
                label[y] = nxt
                first[y] = x
                nxt += 1
                order.append(y)
            c = label[y] + 1
            if tight:
                b = best[pos]
                if c > b:
                    return None
                if c < b:
                    tight = False
            code.append(c)
            pos += 1
        if tight and best[pos] != 0:
            tight = False
        code.append(0)
        pos += 1
    return code


def canonical_code(offsets, nbrs, reflect: bool) -> bytes:
    """Lexicographically least BFS code over all directed starting edges."""
    n = len(offsets) - 1
    if n > 255:
        raise ValueError("canonical_code supports at most 255 vertices")
    best = None
    for u in range(n):
        for idx in range(offsets[u], offsets[u + 1]):
            code = _code_from(offsets, nbrs, u, nbrs[idx], reflect, best)
            if code is not None and (best is None or code < best):
                best = code
    return bytes(best or [])


def canonical_coloring(colors) -> bytes:
    """Relabel colors by order of first appearance."""
    perm = [-1, -1, -1, -1]
    nxt = 0
    out = bytearray(len(colors))
    for i, c in enumerate(colors):
        if perm[c] < 0:
            perm[c] = nxt
            nxt += 1
        out[i] = perm[c]
    return bytes(out)


def kempe_neighbors(offsets, nbrs, colors: bytes) -> set[bytes]:
    """Canonical colorings reachable from ``colors`` by one Kempe change."""
    n = len(colors)
    out = set()
    for ci, cj in _PAIRS:
        seen = [False] * n
        for start in range(n):
            if seen[start] or (colors[start] != ci and colors[start] != cj):
                continue
            comp = [start]
            seen[start] = True
            head = 0
            while head < len(comp):
                x = comp[head]
                head += 1
                for idx in range(offsets[x], offsets[x + 1]):
                    y = nbrs[idx]
                    if not seen[y] and (colors[y] == ci or colors[y] == cj):
                        seen[y] = True
                        comp.append(y)
            flipped = bytearray(colors)
            for x in comp:
                flipped[x] = cj if colors[x] == ci else ci
            out.add(canonical_coloring(flipped))
    return out
