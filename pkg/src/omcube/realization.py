"""Exact rational point and vector configurations.

Affine configurations are lifted to ``(x, 1)``; linear ones are used as
given.  Homogeneous points of projective space are vectors of length d+1 up
to positive scaling, with the finite ones normalised to last coordinate 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import labels as lab
from .linalg import (
    det_int,
    frac,
    frac_str,
    integer_scaled,
    inverse,
    matvec,
    rank as mat_rank,
    row_reduce,
    sign,
    solve,
)
from .om import OrientedMatroid, Pair
from .signed import Ground, bits, canonical_pair


class RealizationError(ValueError):
    pass


class NotConcurrent(RealizationError):
    """Lines or segments that should share a point do not."""

    def __init__(self, message: str, witness: tuple[str, str] | None = None):
        super().__init__(message)
        self.witness = witness


class InadmissibleMap(RealizationError):
    def __init__(self, message: str, labels: Sequence[str] = ()):
        super().__init__(message)
        self.labels = tuple(labels)


@dataclass(frozen=True)
class PointConfig:
    mode: str
    labels: tuple[str, ...]
    coords: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.mode not in ("affine", "linear"):
            raise RealizationError(f"unknown mode {self.mode!r}")
        if len(self.labels) != len(self.coords):
            raise RealizationError("one coordinate vector per label")
        if len(set(self.labels)) != len(self.labels):
            raise RealizationError("duplicate labels")
        dims = {len(c) for c in self.coords}
        if len(dims) > 1:
            raise RealizationError("points have different dimensions")

    @classmethod
    def make(cls, mode: str, points: Iterable[tuple[str, Sequence]]) -> "PointConfig":
        pts = [(str(label), tuple(frac(x) for x in xs)) for label, xs in points]
        return cls(mode, tuple(p[0] for p in pts), tuple(p[1] for p in pts))

    @property
    def dim(self) -> int:
        return len(self.coords[0]) if self.coords else 0

    def point(self, label: str) -> tuple[Fraction, ...]:
        return self.coords[self.labels.index(label)]

    def as_dict(self) -> dict[str, tuple[Fraction, ...]]:
        return dict(zip(self.labels, self.coords))

    def lifted(self) -> list[tuple[Fraction, ...]]:
        if self.mode == "affine":
            return [c + (Fraction(1),) for c in self.coords]
        return list(self.coords)

    def subconfig(self, labels: Iterable[str]) -> "PointConfig":
        d = self.as_dict()
        keep = list(labels)
        return PointConfig(self.mode, tuple(keep), tuple(d[x] for x in keep))

    def relabel(self, mapping: Mapping[str, str]) -> "PointConfig":
        return PointConfig(self.mode, tuple(mapping.get(x, x) for x in self.labels), self.coords)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "points": [
                {"label": x, "coords": [frac_str(c) for c in cs]}
                for x, cs in zip(self.labels, self.coords)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PointConfig":
        return cls.make(data["mode"], ((p["label"], p["coords"]) for p in data["points"]))


@dataclass(frozen=True)
class HomogeneousPoint:
    label: str
    coords: tuple[Fraction, ...]

    @property
    def at_infinity(self) -> bool:
        return self.coords[-1] == 0

    def affine(self) -> tuple[Fraction, ...]:
        if self.at_infinity:
            raise RealizationError("point at infinity has no affine coordinates")
        t = self.coords[-1]
        return tuple(x / t for x in self.coords[:-1])


# ---------------------------------------------------------------------------
# chirotope and oriented matroid of a configuration


class _Realized:
    """Integer vectors in R^r (r = rank) with all r-minors cached."""

    def __init__(self, config: PointConfig):
        lifted = config.lifted()
        vecs = [integer_scaled(v) for v in lifted]
        # per-vector positive factor taking the given vector to its integer form
        self.scale = [
            next(Fraction(w) / x for w, x in zip(iv, v) if x) if any(v) else Fraction(1)
            for iv, v in zip(vecs, lifted)
        ]
        for label, v in zip(config.labels, vecs):
            if not any(v):
                raise RealizationError(f"zero vector for {label!r}")
        self.n = len(vecs)
        _, pivots = row_reduce([list(map(Fraction, v)) for v in vecs])
        # coordinate projection onto pivot columns is injective on the span
        self.r = len(pivots)
        self.vecs = [[v[c] for c in pivots] for v in vecs]
        self.minors: dict[int, int] = {}
        for combo in combinations(range(self.n), self.r):
            m = 0
            for i in combo:
                m |= 1 << i
            self.minors[m] = det_int([self.vecs[i] for i in combo])
        self.bases = [m for m, d in self.minors.items() if d]

    def circuits(self) -> dict[Pair, tuple[int, ...]]:
        found: dict[int, tuple[Pair, tuple[int, ...]]] = {}
        full = (1 << self.n) - 1
        for basis in self.bases:
            db = self.minors[basis]
            for e in bits(full & ~basis):
                coeff = [0] * self.n
                coeff[e] = -db
                support = 1 << e
                for b in bits(basis):
                    d = self.minors[(basis & ~(1 << b)) | (1 << e)]
                    if not d:
                        continue
                    lo, hi = (b, e) if b < e else (e, b)
                    between = basis & ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
                    coeff[b] = -d if between.bit_count() & 1 else d
                    support |= 1 << b
                if support in found:
                    continue
                plus = minus = 0
                for i in bits(support):
                    if coeff[i] > 0:
                        plus |= 1 << i
                    else:
                        minus |= 1 << i
                pair = canonical_pair(plus, minus)
                if pair != (plus, minus):
                    coeff = [-c for c in coeff]
                witness = tuple(c * s for c, s in zip(coeff, self.scale))
                found[support] = (pair, _integral(witness))
        return dict(found.values())

    def _cofactor_normal(self, indep: Sequence[int]) -> list[int]:
        """Normal u with u.x = det(v_I, x)."""
        rows = [self.vecs[i] for i in indep]
        r = self.r
        normal = []
        for k in range(r):
            minor = [[row[c] for c in range(r) if c != k] for row in rows]
            s = -1 if (r - 1 + k) & 1 else 1
            normal.append(s * det_int(minor))
        return normal

    def cocircuits(self) -> set[Pair]:
        out: set[Pair] = set()
        hyperplanes: list[int] = []
        seen: set[int] = set()
        for basis in self.bases:
            for b in bits(basis):
                indep = basis & ~(1 << b)
                if indep in seen:
                    continue
                seen.add(indep)
                if any(not (indep & ~h) for h in hyperplanes):
                    continue
                u = self._cofactor_normal(list(bits(indep)))
                plus = minus = 0
                for i, v in enumerate(self.vecs):
                    s = sum(a * x for a, x in zip(u, v))
                    if s > 0:
                        plus |= 1 << i
                    elif s < 0:
                        minus |= 1 << i
                hyperplanes.append(((1 << self.n) - 1) & ~(plus | minus))
                out.add(canonical_pair(plus, minus))
        return out


def _integral(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector."""
    from math import gcd

    w = integer_scaled(v)
    g = 0
    for x in w:
        g = gcd(g, x)
    return tuple(x // g for x in w) if g else tuple(w)


class RealizedOM(OrientedMatroid):
    """Oriented matroid of a configuration, with an integer dependence
    witness for every circuit (indexed like the ground set)."""

    def __init__(self, config: PointConfig):
        data = _Realized(config)
        self.config = config
        self.witnesses: dict[Pair, tuple[int, ...]] = data.circuits()
        super().__init__(Ground(config.labels), self.witnesses.keys(), data.cocircuits())
        self.__dict__["rank"] = data.r

    def witness(self, pair: Pair) -> dict[str, int]:
        w = self.witnesses[canonical_pair(*pair)]
        return {x: c for x, c in zip(self.labels, w) if c}

    def check_witnesses(self) -> bool:
        vecs = self.config.lifted()
        for w in self.witnesses.values():
            total = [sum((c * v[k] for c, v in zip(w, vecs)), Fraction(0)) for k in range(len(vecs[0]))]
            if any(total):
                return False
        return True


def om_from_points(config: PointConfig) -> RealizedOM:
    return RealizedOM(config)


def chirotope(config: PointConfig) -> dict[tuple[str, ...], int]:
    """Signs of the maximal minors, keyed by label tuples in ground order.

    The global sign depends on the coordinates chosen for the span and is
    fixed for a given configuration.
    """
    data = _Realized(config)
    return {
        tuple(config.labels[i] for i in bits(m)): sign(d)
        for m, d in sorted(data.minors.items(), key=lambda kv: tuple(bits(kv[0])))
    }


def chirotope_sign(chi: Mapping[tuple[str, ...], int], order: Sequence[str], labels: Sequence[str]) -> int:
    """Value of the alternating map on an arbitrary label tuple: 0 on a
    repeated label, otherwise the stored sign times the sorting parity."""
    if len(set(labels)) != len(labels):
        return 0
    pos = {x: k for k, x in enumerate(order)}
    idx = [pos[x] for x in labels]
    parity = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b]) & 1
    value = chi[tuple(sorted(labels, key=pos.__getitem__))]
    return -value if parity else value


# ---------------------------------------------------------------------------
# adjoint representations


def standard_simplex(n: int) -> PointConfig:
    """``y_i = e_i`` and ``b = 0`` in R^n."""
    pts = [(lab.y_label(i), [int(j == i) for j in range(1, n + 1)]) for i in range(1, n + 1)]
    pts.append(("b", [0] * n))
    return PointConfig.make("affine", pts)


def _simplex_points(n: int, simplex: PointConfig | None) -> tuple[list[tuple[Fraction, ...]], tuple[Fraction, ...]]:
    simplex = simplex or standard_simplex(n)
    if len(simplex.coords) != n + 1 or simplex.dim != n:
        raise RealizationError("need n+1 points in R^n")
    if mat_rank([list(c) + [Fraction(1)] for c in simplex.coords]) != n + 1:
        raise RealizationError("simplex is degenerate")
    return list(simplex.coords[:n]), simplex.coords[n]


def barycentric_adjoint(n: int, simplex: PointConfig | None = None) -> PointConfig:
    """``Y_i -> y_i`` and ``X_{A'} -> b_{[n] minus A}``, where ``b_S`` is the
    barycenter of ``b`` and the ``y_i`` with i in S."""
    ys, b = _simplex_points(n, simplex)
    pts = [(lab.y_label(i + 1), ys[i]) for i in range(n)]
    full = (1 << n) - 1
    for a in range(1 << n):
        s = full & ~a
        members = [ys[i] for i in bits(s)]
        k = len(members) + 1
        pt = tuple((b[j] + sum((m[j] for m in members), Fraction(0))) / k for j in range(n))
        pts.append((lab.vertex_label(a, n), pt))
    return PointConfig.make("affine", pts)


def barycentric_coordinates(simplex_pts: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> list[Fraction]:
    d = len(x)
    a = [[p[j] for p in simplex_pts] for j in range(d)] + [[Fraction(1)] * len(simplex_pts)]
    sol = solve(a, list(x) + [Fraction(1)])
    if sol is None:
        raise RealizationError("point has no unique barycentric coordinates")
    return sol


def interior_point_adjoint(n: int, simplex: PointConfig | None, c: Sequence) -> PointConfig:
    """``X_{A'}`` goes to the meet of aff({y_i : i in A} + c) with the face
    spanned by b and the remaining ``y_j``."""
    ys, b = _simplex_points(n, simplex)
    c = tuple(frac(x) for x in c)
    if any(g <= 0 for g in barycentric_coordinates(ys + [b], c)):
        raise RealizationError("c is not strictly inside the simplex")
    pts = [(lab.y_label(i + 1), ys[i]) for i in range(n)]
    full = (1 << n) - 1
    for a in range(1 << n):
        through = [ys[i] for i in bits(a)]
        face = [ys[i] for i in bits(full & ~a)] + [b]
        # c + sum beta_i (y_i - c) = sum lambda_j f_j,  sum lambda_j = 1
        cols = [[y[k] - c[k] for k in range(n)] for y in through]
        cols += [[-f[k] for k in range(n)] for f in face]
        rows = [[col[k] for col in cols] for k in range(n)]
        rows.append([Fraction(0)] * len(through) + [Fraction(1)] * len(face))
        sol = solve(rows, [-x for x in c] + [Fraction(1)])
        if sol is None:
            raise RealizationError(f"no unique intersection for A={lab.members(a, n)}")
        lam = sol[len(through):]
        if any(x < 0 for x in lam):
            raise RealizationError("intersection falls outside the face")
        pt = tuple(sum((l * f[k] for l, f in zip(lam, face)), Fraction(0)) for k in range(n))
        pts.append((lab.vertex_label(a, n), pt))
    return PointConfig.make("affine", pts)


def lifted_adjoint_vectors(n: int) -> PointConfig:
    """The vectors ``(e_i, 0)`` and ``(v_A, 1)`` in linear mode."""
    pts = [(lab.y_label(i), [int(j == i) for j in range(1, n + 1)] + [0]) for i in range(1, n + 1)]
    for a in range(1 << n):
        pts.append((lab.vertex_label(a, n), [-1 if a >> k & 1 else 1 for k in range(n)] + [1]))
    return PointConfig.make("linear", pts)


def cube_points(n: int) -> PointConfig:
    pts = [(lab.vertex_label(a, n), [-1 if a >> k & 1 else 1 for k in range(n)]) for a in range(1 << n)]
    return PointConfig.make("affine", pts)


# ---------------------------------------------------------------------------
# projective maps


def _as_matrix(m) -> list[list[Fraction]]:
    return [[frac(x) for x in row] for row in m]


def projective_denominators(config: PointConfig, matrix) -> dict[str, Fraction]:
    """Last homogeneous coordinate of each image point."""
    if config.mode != "affine":
        raise RealizationError("projective maps act on affine configurations")
    m = _as_matrix(matrix)
    return {x: matvec(m, list(v))[-1] for x, v in zip(config.labels, config.lifted())}


def projective_map(config: PointConfig, matrix, allow_reorientation: bool = False) -> PointConfig:
    """Image of an affine configuration under ``x -> M (x, 1)``, dehomogenised.

    Images sent to infinity are an error.  Images with negative last
    coordinate change the oriented matroid by reorientation; they are an
    error unless ``allow_reorientation`` is set (see
    :func:`reoriented_by_map`).
    """
    m = _as_matrix(matrix)
    d = config.dim
    if len(m) != d + 1 or any(len(row) != d + 1 for row in m):
        raise RealizationError(f"matrix must be {d + 1}x{d + 1}")
    if mat_rank(m) != d + 1:
        raise RealizationError("matrix is singular")
    if config.mode == "linear":
        return PointConfig.make("linear", ((x, matvec(m, list(v))) for x, v in zip(config.labels, config.coords)))
    pts = []
    at_infinity = []
    negative = []
    for x, v in zip(config.labels, config.lifted()):
        h = matvec(m, list(v))
        t = h[-1]
        if t == 0:
            at_infinity.append(x)
            continue
        if t < 0:
            negative.append(x)
        pts.append((x, [c / t for c in h[:-1]]))
    if at_infinity:
        raise InadmissibleMap("points sent to infinity", at_infinity)
    if negative and not allow_reorientation:
        raise InadmissibleMap("the hyperplane sent to infinity separates the points", negative)
    return PointConfig.make("affine", pts)


def reoriented_by_map(config: PointConfig, matrix) -> frozenset[str]:
    return frozenset(x for x, t in projective_denominators(config, matrix).items() if t < 0)


# ---------------------------------------------------------------------------
# centers and meeting points


def _line_meet(p1, p2, q1, q2) -> tuple[Fraction, Fraction] | None:
    """Parameters (s, t) with p1 + s(p2-p1) = q1 + t(q2-q1), if unique."""
    d = len(p1)
    rows = [[p2[k] - p1[k], q1[k] - q2[k]] for k in range(d)]
    sol = solve(rows, [q1[k] - p1[k] for k in range(d)])
    return None if sol is None else (sol[0], sol[1])


def segments_meet(segments: Sequence[tuple[str, str]], config: PointConfig) -> tuple[Fraction, ...]:
    """Common point of the given segments, which must lie in the relative
    interior of each; computed from the first two, verified on all."""
    pts = config.as_dict()
    if len(segments) < 2:
        raise RealizationError("need at least two segments")
    (a1, b1), (a2, b2) = segments[0], segments[1]
    p1, p2, q1, q2 = pts[a1], pts[b1], pts[a2], pts[b2]
    st = _line_meet(p1, p2, q1, q2)
    if st is None:
        raise NotConcurrent("first two segments do not meet in a single point", segments[1])
    s = st[0]
    o = tuple(p1[k] + s * (p2[k] - p1[k]) for k in range(len(p1)))
    for a, b in segments:
        if not in_open_segment(o, pts[a], pts[b]):
            raise NotConcurrent(f"segment {a}-{b} misses the common point", (a, b))
    return o


def in_open_segment(o, p, q) -> bool:
    """True iff o = p + t (q - p) for some 0 < t < 1."""
    t = None
    for k in range(len(p)):
        if q[k] != p[k]:
            t = (o[k] - p[k]) / (q[k] - p[k])
            break
    return t is not None and 0 < t < 1 and all(o[k] == p[k] + t * (q[k] - p[k]) for k in range(len(p)))


def _cube_n(config: PointConfig) -> int:
    ns = {lab.parse_vertex(x)[1] for x in config.labels}
    if len(ns) != 1 or len(config.labels) != 1 << next(iter(ns)):
        raise RealizationError("configuration is not labelled by cube vertices")
    return ns.pop()


def diagonals(n: int) -> list[tuple[str, str]]:
    full = (1 << n) - 1
    return [(lab.vertex_label(a, n), lab.vertex_label(full & ~a, n)) for a in range(1 << n) if a < full & ~a]


def center(config: PointConfig) -> tuple[Fraction, ...]:
    """Common point of the main diagonals of a realized cube."""
    if config.mode != "affine":
        raise RealizationError("center needs an affine configuration")
    n = _cube_n(config)
    if n == 1:
        a, b = config.coords
        return tuple((x + y) / 2 for x, y in zip(a, b))
    return segments_meet(diagonals(n), config)


def facet_subconfig(config: PointConfig, i: int, positive: bool) -> PointConfig:
    """Vertices on the facet ``x_i = +`` (or ``-``), relabelled as a cube of
    one dimension less."""
    n = _cube_n(config)
    want = "+" if positive else "-"
    pts = [(x[:i] + x[i + 1:], c) for x, c in zip(config.labels, config.coords) if x[i] == want]
    return PointConfig.make("affine", pts)


def facet_centers(config: PointConfig) -> PointConfig:
    """Centers of the 2n facets, labelled ``i`` (facet x_i=+) and ``i'``."""
    n = _cube_n(config)
    plus = [(str(i), center(facet_subconfig(config, i, True))) for i in range(1, n + 1)]
    minus = [(f"{i}'", center(facet_subconfig(config, i, False))) for i in range(1, n + 1)]
    return PointConfig.make("affine", plus + minus)


def facet_centers_polar(config: PointConfig) -> RealizedOM:
    from .generators import cross_polytope
    from .om import isomorphism

    n = _cube_n(config)
    if n < 3:
        raise RealizationError("the polar construction needs n >= 3")
    o = center(config)
    fc = facet_centers(config)
    om = om_from_points(fc)
    if isomorphism(om, cross_polytope(n)) is None:
        raise RealizationError("facet centers are not a cross-polytope")
    for i in range(1, n + 1):
        if not in_open_segment(o, fc.point(str(i)), fc.point(f"{i}'")):
            raise NotConcurrent(f"center is not inside the segment between facet centers {i}, {i}'")
    return om


def _homogeneous_line_meet(a, b, c, d) -> tuple[Fraction, ...] | None:
    """Common projective point of span(a, b) and span(c, d)."""
    k = len(a)
    rows = [[a[j], b[j], -c[j], -d[j]] for j in range(k)]
    red, piv = row_reduce(rows)
    if len(piv) != 3:
        return None
    free = next(j for j in range(4) if j not in piv)
    coef = [Fraction(0)] * 4
    coef[free] = Fraction(1)
    for row, p in zip(red, piv):
        coef[p] = -row[free]
    return tuple(coef[0] * a[j] + coef[1] * b[j] for j in range(k))


def _split(x, a, b) -> tuple[Fraction, Fraction] | None:
    """(alpha, beta) with x = alpha a + beta b."""
    sol = solve([[a[j], b[j]] for j in range(len(a))], list(x))
    return None if sol is None else (sol[0], sol[1])


def edge_meeting_point(config: PointConfig, i: int) -> HomogeneousPoint:
    """Common projective point of the lines through the edges of direction
    i, scaled as ``lambda a - mu b`` (lambda, mu > 0) with a on the facet
    ``x_i = +`` and b on ``x_i = -``."""
    if config.mode != "affine":
        raise RealizationError("edge meeting point needs an affine configuration")
    n = _cube_n(config)
    if not 1 <= i <= n:
        raise RealizationError(f"direction {i} out of range")
    bit = 1 << (i - 1)
    lifted = dict(zip(config.labels, config.lifted()))
    edges = [
        (lab.vertex_label(a, n), lab.vertex_label(a | bit, n)) for a in range(1 << n) if not a & bit
    ]
    (u1, w1), (u2, w2) = edges[0], edges[1 % len(edges)]
    if len(edges) == 1:
        a, b = lifted[u1], lifted[w1]
        x = tuple(p - q for p, q in zip(a, b))
    else:
        x = _homogeneous_line_meet(lifted[u1], lifted[w1], lifted[u2], lifted[w2])
        if x is None:
            raise NotConcurrent("first two edges do not meet", edges[1])
    ab = _split(x, lifted[u1], lifted[w1])
    if ab is None or ab[0] == 0 or ab[1] == 0 or sign(ab[0]) == sign(ab[1]):
        raise NotConcurrent("meeting point lies on the edge segment", edges[0])
    if ab[0] < 0:
        x = tuple(-c for c in x)
    for u, w in edges:
        ab = _split(x, lifted[u], lifted[w])
        if ab is None or not (ab[0] > 0 > ab[1]):
            raise NotConcurrent(f"edge {u}-{w} misses the meeting point", (u, w))
    return HomogeneousPoint(lab.y_label(i), _normalise(x))


def _normalise(x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Positive rescaling: last coordinate 1 if finite, else first nonzero
    absolute value 1."""
    t = x[-1]
    if t != 0:
        s = abs(t)
    else:
        s = abs(next(c for c in x if c != 0))
    return tuple(c / s for c in x)


def adjoint_realization_from_cube(config: PointConfig) -> PointConfig:
    """Lifted cube points plus the n edge meeting points, in linear mode, on
    the canonical adjoint ground."""
    n = _cube_n(config)
    lifted = dict(zip(config.labels, config.lifted()))
    pts = [(lab.y_label(i), edge_meeting_point(config, i).coords) for i in range(1, n + 1)]
    pts += [(x, lifted[x]) for x in lab.cube_labels(n)]
    return PointConfig.make("linear", pts)


def separating_transform(config: PointConfig, i: int) -> list[list[Fraction]]:
    """A projective map sending the hyperplane ``h = 0`` to infinity, where
    the affine function h is positive on the facet ``x_i = +`` and negative on
    the facet ``x_i = -`` and at the center.  The image realizes the cube
    reoriented on the facet ``x_i = -``."""
    n = _cube_n(config)
    d = config.dim
    o = center(config)
    plus = facet_subconfig(config, i, True)
    minus = facet_subconfig(config, i, False)
    # affine function vanishing on the facet: nullspace of the lifted points
    from .linalg import nullspace

    ker = nullspace([list(c) + [Fraction(1)] for c in plus.coords])
    if len(ker) != 1:
        raise RealizationError("facet does not span a hyperplane")
    g = ker[0]

    def value(x):
        return sum((a * b for a, b in zip(g, list(x) + [Fraction(1)])), Fraction(0))

    if value(o) > 0:
        g = [-a for a in g]
    lows = [-value(x) for x in list(minus.coords) + [o]]
    if min(lows) <= 0:
        raise RealizationError("facet hyperplane does not separate the cube")
    eps = min(lows) / 2
    m = [[Fraction(int(r == c)) for c in range(d + 1)] for r in range(d)]
    m.append(g[:d] + [g[d] + eps])
    return m


def meeting_point_by_projection(config: PointConfig, i: int) -> HomogeneousPoint:
    """Meeting point of the direction-i edges found as the preimage of the
    center of the reoriented image under :func:`separating_transform`."""
    n = _cube_n(config)
    m = separating_transform(config, i)
    image = projective_map(config, m, allow_reorientation=True)
    bit = 1 << (i - 1)
    pairs = [(lab.vertex_label(a, n), lab.vertex_label(a | bit, n)) for a in range(1 << n) if not a & bit]
    if len(pairs) == 1:
        pairs = pairs * 2
    c = segments_meet(pairs, image)
    pre = matvec(inverse(m), list(c) + [Fraction(1)])
    ref = edge_meeting_point(config, i)
    if mat_rank([pre, list(ref.coords)]) != 1:
        raise NotConcurrent("projected center does not pull back to the edge meeting point")
    return ref
