"""Constructors for the named oriented matroids: cross-polytopes, real cubes,
their rectangles and smallest cocircuits, and the canonical adjoint."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import labels as lab
from .om import OrientedMatroid
from .realization import cube_points, lifted_adjoint_vectors, om_from_points
from .signed import Ground, SignedSet, canonical_pair, orthogonal_pairs

MAX_ENUMERATED_N = 4


def _check_n(n: int, hi: int | None = None) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an integer >= 2")
    if hi is not None and n > hi:
        raise ValueError(f"n={n} is beyond the enumeration bound {hi}")


@dataclass(frozen=True)
class SignConflict:
    """A rejected circuit signing that fails orthogonality, with the adopted
    signing on the same support and one cocircuit it conflicts with."""

    rejected: SignedSet
    adopted: SignedSet
    conflicts_with: SignedSet


def _cross_cocircuits(n: int, g: Ground) -> list[tuple[int, int]]:
    out = []
    for i in range(1, n + 1):
        out.append((g.mask([str(i)]), g.mask([f"{i}'"])))
    for a in range(1 << n):
        members = [str(i) if not a >> (i - 1) & 1 else f"{i}'" for i in range(1, n + 1)]
        out.append((g.mask(members), 0))
    return out


def same_side_cross_circuits(n: int) -> list[SignedSet]:
    """The signing ``({i,j},{i',j'})`` of the cross-polytope circuits.  It
    is not orthogonal to the cocircuits; it is kept so the conflict can be
    reported next to the realization-derived signing."""
    g = Ground(lab.cross_labels(n))
    return [
        SignedSet.from_labels(g, [str(i), str(j)], [f"{i}'", f"{j}'"])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


def cross_polytope_sign_conflicts(n: int) -> list[SignConflict]:
    om = cross_polytope(n)
    out = []
    cocircuits = om.sorted_cocircuits()
    for c in same_side_cross_circuits(n):
        bad = next((d for d in cocircuits if not c.orthogonal(d)), None)
        if bad is not None:
            adopted = next(x for x in om.circuits if x.support == c.support)
            out.append(SignConflict(c, adopted, bad))
    return out


@lru_cache(maxsize=None)
def cross_polytope(n: int) -> OrientedMatroid:
    """O_n on ``1..n, 1'..n'`` (``i`` = e_i, ``i'`` = -e_i)."""
    _check_n(n)
    g = Ground(lab.cross_labels(n))
    circuits = [
        (g.mask([str(i), f"{i}'"]), g.mask([str(j), f"{j}'"]))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return OrientedMatroid(g, circuits, _cross_cocircuits(n, g))


@lru_cache(maxsize=None)
def cross_polytope_plus_zero(n: int) -> OrientedMatroid:
    """O_n with the extra point ``0`` placed on the positive side of every
    positive cocircuit and on every ``Y_i`` hyperplane."""
    _check_n(n)
    g = Ground(lab.cross_labels(n) + ["0"])
    zero = g.mask(["0"])
    cocircuits = []
    for p, m in _cross_cocircuits(n, Ground(lab.cross_labels(n))):
        cocircuits.append((p | zero, 0) if not m else (p, m))
    return OrientedMatroid(g, cocircuits=cocircuits)


@lru_cache(maxsize=None)
def real_cube(n: int) -> OrientedMatroid:
    """Q_n: affine dependencies of the vertices of [-1, 1]^n."""
    _check_n(n, MAX_ENUMERATED_N)
    return om_from_points(cube_points(n))


@lru_cache(maxsize=None)
def canonical_adjoint(n: int) -> OrientedMatroid:
    """Linear dependencies of ``(e_i, 0)`` (labelled ``y_i``) and
    ``(v_A, 1)`` (labelled by the vertex of v_A)."""
    _check_n(n, MAX_ENUMERATED_N)
    return om_from_points(lifted_adjoint_vectors(n))


def cube_ground(n: int) -> Ground:
    return Ground(lab.cube_labels(n))


def rectangles(n: int) -> set[SignedSet]:
    """All signed rectangles ``({v, v flipped on A+B}, {v flipped on A, v
    flipped on B})`` with A, B nonempty and disjoint."""
    _check_n(n)
    g = cube_ground(n)
    out = set()
    for v in range(1 << n):
        for a in range(1, 1 << n):
            rest = ((1 << n) - 1) & ~a
            b = rest
            while b:
                plus = (1 << v) | (1 << (v ^ a ^ b))
                minus = (1 << (v ^ a)) | (1 << (v ^ b))
                out.add(canonical_pair(plus, minus))
                b = (b - 1) & rest
    return {SignedSet(g, p, m) for p, m in out}


def facet_mask(n: int, i: int, positive: bool) -> int:
    """Vertices with coordinate i equal to + (or -), as a ground bitmask."""
    bit = 1 << (i - 1)
    out = 0
    for a in range(1 << n):
        if bool(a & bit) != positive:
            out |= 1 << a
    return out


def skew_facet_mask(n: int, i: int, j: int, positive: bool) -> int:
    """Vertices with ``v(i) = v(j)`` (positive) or ``v(i) = -v(j)``."""
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out = 0
    for a in range(1 << n):
        same = bool(a & bi) == bool(a & bj)
        if same == positive:
            out |= 1 << a
    return out


def _affine_cocircuit(n: int, normal: dict[int, int], offset: int) -> tuple[int, int]:
    """Signs of ``sum normal[k] x_k + offset`` on the cube vertices."""
    plus = minus = 0
    for a in range(1 << n):
        val = offset + sum(c * (-1 if a >> (k - 1) & 1 else 1) for k, c in normal.items())
        if val > 0:
            plus |= 1 << a
        elif val < 0:
            minus |= 1 << a
    return canonical_pair(plus, minus)


def smallest_cocircuits(n: int, include_skew: bool = False) -> set[SignedSet]:
    """Cocircuits of Q_n complementary to the facets ``x_i = +-1`` and, with
    ``include_skew``, to the skew facets ``x_i = +-x_j``."""
    _check_n(n)
    g = cube_ground(n)
    pairs = set()
    for i in range(1, n + 1):
        pairs.add(_affine_cocircuit(n, {i: 1}, -1))
        pairs.add(_affine_cocircuit(n, {i: 1}, 1))
    if include_skew:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pairs.add(_affine_cocircuit(n, {i: 1, j: -1}, 0))
                pairs.add(_affine_cocircuit(n, {i: 1, j: 1}, 0))
    return {SignedSet(g, p, m) for p, m in pairs}


def check_orthogonal(om: OrientedMatroid) -> bool:
    return all(
        orthogonal_pairs(cp, cm, dp, dm) for cp, cm in om.circuit_pairs for dp, dm in om.cocircuit_pairs
    )
