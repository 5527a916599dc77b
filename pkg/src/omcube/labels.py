"""Label grammar for the named ground sets.

* cross-polytope: ``"1".."n"`` and ``"1'".."n'"``
* cube vertices: ``"v"`` followed by n sign characters; character k is
  ``-`` exactly when k belongs to the index set A of ``v_A = (-1_A, 1_rest)``
* points at infinity / adjoint generators: ``"y1".."yn"``
* the extra point of the cross-polytope extension: ``"0"``

Subsets of ``[n]`` are bitmasks with bit ``i-1`` standing for coordinate i.
"""
from __future__ import annotations

import re

_VERTEX = re.compile(r"^v[+-]+$")


def vertex_label(a: int, n: int) -> str:
    return "v" + "".join("-" if a >> k & 1 else "+" for k in range(n))


def parse_vertex(label: str) -> tuple[int, int]:
    """``(A, n)`` for a cube-vertex label."""
    if not _VERTEX.match(label):
        raise ValueError(f"not a cube-vertex label: {label!r}")
    signs = label[1:]
    a = 0
    for k, ch in enumerate(signs):
        if ch == "-":
            a |= 1 << k
    return a, len(signs)


def is_vertex_label(label: str) -> bool:
    return bool(_VERTEX.match(label))


def cube_labels(n: int) -> list[str]:
    """Vertex labels in bitmask order of A."""
    return [vertex_label(a, n) for a in range(1 << n)]


def flip(label: str, b: int) -> str:
    """Label of ``_{-B}v``: coordinates in B negated."""
    a, n = parse_vertex(label)
    return vertex_label(a ^ b, n)


def coordinate(label: str, i: int) -> int:
    """Sign of coordinate ``i`` (1-based) of a vertex."""
    return -1 if label[i] == "-" else 1


def y_label(i: int) -> str:
    return f"y{i}"


def y_labels(n: int) -> list[str]:
    return [y_label(i) for i in range(1, n + 1)]


def cross_labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)] + [f"{i}'" for i in range(1, n + 1)]


def adjoint_labels(n: int) -> list[str]:
    """Canonical adjoint ground order: y-labels then vertex labels."""
    return y_labels(n) + cube_labels(n)


def subset(indices) -> int:
    """Bitmask of a collection of 1-based coordinates."""
    out = 0
    for i in indices:
        out |= 1 << (i - 1)
    return out


def members(a: int, n: int) -> list[int]:
    return [i + 1 for i in range(n) if a >> i & 1]
