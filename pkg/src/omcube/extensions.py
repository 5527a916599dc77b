"""Localizations, single-element extensions, and the cube/adjoint checks.

A localization assigns a sign to each member of a half family of
cocircuits (one signing per hyperplane).  It is checked hyperline by
hyperline on the rank-2 contraction, which is always realizable: its
cocircuit classes are directions in the plane and a new point is either
the origin, one of the directions, or lies in a sector between two
consecutive directions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from . import labels as lab
from .generators import (
    cross_polytope,
    facet_mask,
    rectangles,
    skew_facet_mask,
)
from .om import OMError, OrientedMatroid, Pair, restriction
from .signed import Ground, SignedSet, bits, canonical_pair

SIGN_CHARS = {1: "+", -1: "-", 0: "0"}
CHAR_SIGNS = {v: k for k, v in SIGN_CHARS.items()}


class NotALocalization(OMError):
    pass


class CubeInvariantError(AssertionError):
    """A property every oriented cube has was found to fail."""


@dataclass
class CheckReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _sign_at(pair: Pair, e: int) -> int:
    p, m = pair
    return 1 if p >> e & 1 else -1 if m >> e & 1 else 0


def _neg(pair: Pair) -> Pair:
    return pair[1], pair[0]


# ---------------------------------------------------------------------------
# localizations


@dataclass(frozen=True)
class Localization:
    base: OrientedMatroid
    half_family: tuple[Pair, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        if len(self.sigma) != len(self.half_family):
            raise NotALocalization("sigma must assign a sign to every half-family member")
        if any(s not in (-1, 0, 1) for s in self.sigma):
            raise NotALocalization("sigma values must be -1, 0 or +1")

    @classmethod
    def from_string(cls, base: OrientedMatroid, half_family: Sequence, sigma: str) -> "Localization":
        try:
            signs = tuple(CHAR_SIGNS[c] for c in sigma)
        except KeyError as exc:
            raise NotALocalization(f"bad sign character {exc.args[0]!r}") from None
        return cls(base, _half_pairs(base, half_family), signs)

    @property
    def sigma_string(self) -> str:
        return "".join(SIGN_CHARS[s] for s in self.sigma)

    def signed_members(self) -> list[SignedSet]:
        return [self.base.signed(x) for x in self.half_family]

    def value(self, cocircuit: Pair) -> int:
        """Sign of the new point on any signed cocircuit of the base."""
        idx = {x: k for k, x in enumerate(self.half_family)}
        if cocircuit in idx:
            return self.sigma[idx[cocircuit]]
        neg = _neg(cocircuit)
        if neg in idx:
            return -self.sigma[idx[neg]]
        raise KeyError("not a cocircuit of the base")

    def precedes(self, other: "Localization") -> bool:
        """Order of the extension lattice: plus and minus parts both grow."""
        if self.half_family != other.half_family:
            raise ValueError("localizations over different half families")
        return all(a == 0 or a == b for a, b in zip(self.sigma, other.sigma))


def _half_pairs(base: OrientedMatroid, half_family: Sequence) -> tuple[Pair, ...]:
    out = []
    for x in half_family:
        out.append((x.plus, x.minus) if isinstance(x, SignedSet) else tuple(x))
    want = {canonical_pair(*x) for x in out}
    if len(want) != len(out) or want != set(base.cocircuit_pairs):
        raise NotALocalization("half family must list every cocircuit exactly once up to sign")
    return tuple(out)


def default_half_family(om: OrientedMatroid) -> tuple[Pair, ...]:
    """Canonical representatives in sorted order."""
    return tuple((x.plus, x.minus) for x in om.sorted_cocircuits())


def cross_half_family(n: int) -> list[tuple[str, SignedSet]]:
    """Half family of O_n in the fixed order ``Y_1..Y_n`` then ``X_{A'}`` by
    bitmask of A, each paired with its adjoint label (``y_i`` or the vertex
    label of ``v_A``)."""
    om = cross_polytope(n)
    g = om.ground
    out = []
    for i in range(1, n + 1):
        out.append((lab.y_label(i), SignedSet.from_labels(g, [str(i)], [f"{i}'"])))
    for a in range(1 << n):
        members = [f"{i}'" if a >> (i - 1) & 1 else str(i) for i in range(1, n + 1)]
        out.append((lab.vertex_label(a, n), SignedSet.from_labels(g, members, [])))
    return out


def localization_of_element(om: OrientedMatroid, label: str, half_family=None) -> Localization:
    """Signs of an existing element on the half family (a parallel copy)."""
    half = default_half_family(om) if half_family is None else _half_pairs(om, half_family)
    e = om.ground.index[label]
    return Localization(om, half, tuple(_sign_at(x, e) for x in half))


class _Line:
    """Rank-2 contraction by one hyperline, with a cyclic-order model."""

    def __init__(self, base: OrientedMatroid, mask: int, members: list[int], half: Sequence[Pair]):
        self.mask = mask
        self.members = members
        k = len(members)
        full = base.ground.full
        reps = []
        for idx in members:
            p, m = half[idx]
            reps.append(next(bits(full & ~(p | m) & ~mask)))
        self.reps = reps
        first = half[members[0]]
        eps = [1]
        for j in range(1, k):
            d = half[members[j]]
            # orient so that D_j(e_1) = -D_1(e_j)
            eps.append(-_sign_at(first, reps[j]) * _sign_at(d, reps[0]))
        self.eps = eps
        oriented = [half[idx] if s > 0 else _neg(half[idx]) for idx, s in zip(members, eps)]
        self.oriented = oriented
        self.chi = [[_sign_at(oriented[i], reps[j]) if i != j else 0 for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(k):
                if i != j and self.chi[i][j] != -self.chi[j][i]:
                    raise OMError("rank-2 contraction is not alternating")
        # class and orientation of every element outside the hyperline
        self.elem_class: dict[int, tuple[int, int]] = {}
        for x in bits(full & ~mask):
            j = next(c for c, d in enumerate(oriented) if not ((d[0] | d[1]) >> x & 1))
            i = 0 if j else 1
            self.elem_class[x] = (j, _sign_at(oriented[i], x) * self.chi[i][j])
        self._build_slots()

    def _build_slots(self) -> None:
        k = len(self.members)
        chi = self.chi

        def det(a, b):
            (i, s), (j, t) = a, b
            return s * t * chi[i][j]

        def half_plane(w):
            if w == (0, 1):
                return 0
            d = det((0, 1), w)
            if d > 0:
                return 1
            if w == (0, -1):
                return 2
            return 3

        def cmp(a, b):
            ha, hb = half_plane(a), half_plane(b)
            if ha != hb:
                return ha - hb
            if a == b:
                return 0
            return -1 if det(a, b) > 0 else 1

        dirs = sorted([(j, s) for j in range(k) for s in (1, -1)], key=cmp_to_key(cmp))
        size = 4 * k
        self.size = size
        slot = {w: 2 * pos for pos, w in enumerate(dirs)}
        self.slot_of = [slot[(j, 1)] for j in range(k)]
        for a in dirs:
            for b in dirs:
                if a[0] != b[0] and self._rule(slot[a], slot[b]) != det(a, b):
                    raise OMError("rank-2 contraction has no cyclic order")
        allowed = {tuple([0] * k)}
        self.slot_tau: dict[tuple[int, ...], int] = {}
        for q in range(size):
            tau = tuple(self._rule(self.slot_of[j], q) for j in range(k))
            allowed.add(tau)
            self.slot_tau[tau] = q
        self.allowed = allowed

    def _rule(self, su: int, sw: int) -> int:
        d = (sw - su) % self.size
        if d == 0 or d == self.size // 2:
            return 0
        return 1 if d < self.size // 2 else -1

    def tau(self, sigma: Sequence[int]) -> tuple[int, ...]:
        return tuple(e * sigma[idx] for idx, e in zip(self.members, self.eps))

    def triplet_failures(self, tau: Sequence[int]) -> list[tuple[int, int, int]]:
        bad = []
        chi = self.chi
        for a, b, c in combinations(range(len(tau)), 3):
            circ = (chi[b][c], -chi[a][c], chi[a][b])
            prods = [t * s for t, s in zip((tau[a], tau[b], tau[c]), circ)]
            if any(prods) and not (1 in prods and -1 in prods):
                bad.append((a, b, c))
        return bad

    def new_cocircuit(self, tau: Sequence[int], n_old: int) -> Pair | None:
        """Cocircuit with zero set L + p when p falls in an open sector."""
        if 0 in tau:
            return None
        plus = minus = 0
        for x, (j, s) in self.elem_class.items():
            v = -s * tau[j]
            if v > 0:
                plus |= 1 << x
            else:
                minus |= 1 << x
        return plus, minus


class LocalizationChecker:
    """Hyperline models of a base for a fixed half family; reusable across
    many sign vectors."""

    def __init__(self, base: OrientedMatroid, half_family: Sequence[Pair]):
        self.base = base
        self.half = tuple(half_family)
        zero_of = [base.ground.full & ~(p | m) for p, m in self.half]
        self.lines: list[_Line] = []
        for mask in sorted(base.hyperlines):
            members = [k for k, z in enumerate(zero_of) if not (mask & ~z)]
            self.lines.append(_Line(base, mask, members, self.half))

    def check(self, sigma: Sequence[int]) -> "LocalizationReport":
        failures = []
        disagreements = []
        for line in self.lines:
            tau = line.tau(sigma)
            by_slots = tau in line.allowed
            bad = line.triplet_failures(tau)
            by_triplets = not bad
            if by_slots != by_triplets:
                disagreements.append(self._name(line))
            if not by_triplets:
                a, b, c = bad[0]
                names = [self._member_name(line.members[t]) for t in (a, b, c)]
                failures.append(f"hyperline {self._name(line)}: triplet {names}")
            elif not by_slots:
                failures.append(f"hyperline {self._name(line)}: no position in the rank-2 contraction")
        return LocalizationReport(not failures and not disagreements, failures, disagreements)

    def _name(self, line: _Line) -> str:
        return "{" + ",".join(self.base.ground.elements(line.mask)) + "}"

    def _member_name(self, idx: int) -> str:
        return repr(self.base.signed(self.half[idx]))


@dataclass
class LocalizationReport(CheckReport):
    disagreements: list[str] = field(default_factory=list)


@lru_cache(maxsize=64)
def _checker(base: OrientedMatroid, half: tuple[Pair, ...]) -> LocalizationChecker:
    return LocalizationChecker(base, half)


def is_localization(loc: Localization) -> LocalizationReport:
    return _checker(loc.base, loc.half_family).check(loc.sigma)


def extend(loc: Localization, label: str) -> OrientedMatroid:
    """Single-element extension by a new element ``label`` placed according
    to the localization; it is appended to the ground order."""
    report = is_localization(loc)
    if not report:
        raise NotALocalization("; ".join(report.failures[:3]))
    base = loc.base
    if label in base.ground:
        raise ValueError(f"label {label!r} already in the ground set")
    n_old = base.n
    ground = Ground(base.labels + (label,))
    bit = 1 << n_old
    cocircuits = []
    for (p, m), s in zip(loc.half_family, loc.sigma):
        cocircuits.append((p | bit, m) if s > 0 else (p, m | bit) if s < 0 else (p, m))
    for line in _checker(base, loc.half_family).lines:
        new = line.new_cocircuit(line.tau(loc.sigma), n_old)
        if new is not None:
            cocircuits.append(new)
    out = OrientedMatroid(ground, cocircuits=cocircuits)
    back = restriction(out, base.labels)
    if back.circuit_pairs != base.circuit_pairs:
        raise OMError("deleting the new element does not give back the base")
    return out


# ---------------------------------------------------------------------------
# cubes


def cube_dimension(labels: Iterable[str]) -> int:
    vs = [x for x in labels if lab.is_vertex_label(x)]
    ns = {lab.parse_vertex(x)[1] for x in vs}
    if len(ns) != 1:
        raise ValueError("ground has no consistent cube-vertex labels")
    n = ns.pop()
    if set(vs) != set(lab.cube_labels(n)):
        raise ValueError("ground does not contain every cube vertex exactly once")
    return n


def _vertex_mask(om: OrientedMatroid, cube_mask: int, n: int) -> int:
    """Translate a bitmask over cube_labels(n) to the ground of ``om``."""
    return om.mask(lab.vertex_label(a, n) for a in bits(cube_mask))


def is_oriented_cube(om: OrientedMatroid) -> CheckReport:
    """Every signed rectangle is a circuit and every facet is a hyperplane."""
    n = cube_dimension(om.labels)
    if len(om.labels) != 1 << n:
        raise ValueError("ground must consist of cube vertices only")
    failures = []
    cube = Ground(lab.cube_labels(n))
    for r in sorted(rectangles(n), key=SignedSet.sort_key):
        mine = SignedSet.from_labels(om.ground, r.plus_labels, r.minus_labels)
        if not om.has_circuit(mine):
            failures.append(f"rectangle {r!r} is not a signed circuit")
    for i in range(1, n + 1):
        for positive in (True, False):
            m = _vertex_mask(om, facet_mask(n, i, positive), n)
            if m not in om.hyperplanes:
                failures.append(f"facet H{i}{'+' if positive else '-'} is not a hyperplane")
    return CheckReport(not failures, failures)


def adjoint_signatures(n: int) -> list[tuple[str, SignedSet]]:
    """``X~[i]`` and ``X~[i']`` on the canonical adjoint ground."""
    g = Ground(lab.adjoint_labels(n))
    out = []
    for i in range(1, n + 1):
        plus = [x for x in lab.cube_labels(n) if lab.coordinate(x, i) > 0]
        minus = [x for x in lab.cube_labels(n) if lab.coordinate(x, i) < 0]
        out.append((str(i), SignedSet.from_labels(g, plus + [lab.y_label(i)], [])))
        out.append((f"{i}'", SignedSet.from_labels(g, minus, [lab.y_label(i)])))
    return out


def x_tilde_zero(n: int) -> SignedSet:
    g = Ground(lab.adjoint_labels(n))
    return SignedSet.from_labels(g, lab.cube_labels(n), [])


def _on(om: OrientedMatroid, x: SignedSet) -> SignedSet:
    return SignedSet.from_labels(om.ground, x.plus_labels, x.minus_labels)


def is_adjoint(om: OrientedMatroid, n: int, mode: str = "weak") -> CheckReport:
    """Adjoint conditions for O_n on the ground ``y1..yn`` plus vertices.

    weak: rank n+1 and the 2n cocircuits ``X~[e]``.  strong: additionally,
    for every flat F of O_n the members of the half family vanishing on F
    form a flat of rank n+1-rank(F).
    """
    if mode not in ("weak", "strong"):
        raise ValueError("mode is 'weak' or 'strong'")
    if set(om.labels) != set(lab.adjoint_labels(n)):
        raise ValueError("ground is not the adjoint ground of O_n")
    failures = []
    if om.rank != n + 1:
        failures.append(f"rank {om.rank} != {n + 1}")
    for name, x in adjoint_signatures(n):
        if not om.has_cocircuit(_on(om, x)):
            failures.append(f"X~[{name}] is not a cocircuit")
    if mode == "strong" and not failures:
        base = cross_polytope(n)
        half = cross_half_family(n)
        for flat in base.flats():
            members = [name for name, d in half if not (d.support & flat.mask)]
            m = om.mask(members)
            if om.closure(m) != m:
                failures.append(f"image of flat {flat.labels} is not a flat")
            elif om.rank_of(m) != n + 1 - flat.rank:
                failures.append(f"image of flat {flat.labels} has rank {om.rank_of(m)}")
    return CheckReport(not failures, failures)


class FlatKind(enum.Enum):
    PARALLEL = "parallel"
    ANTI_PARALLEL = "anti-parallel"


def classify_flat(cube_om: OrientedMatroid, flat, i: int) -> FlatKind:
    """Parallel if flipping coordinate i maps the flat to itself,
    anti-parallel if to a disjoint set.  Only cube vertices are looked at."""
    mask = flat.mask if hasattr(flat, "mask") else flat if isinstance(flat, int) else cube_om.mask(flat)
    if cube_om.closure(mask) != mask:
        raise ValueError("not a flat")
    verts = [x for x in cube_om.ground.elements(mask) if lab.is_vertex_label(x)]
    n = cube_dimension(cube_om.labels)
    here = set(verts)
    there = {lab.flip(x, 1 << (i - 1)) for x in verts}
    if here == there:
        return FlatKind.PARALLEL
    if not here & there:
        return FlatKind.ANTI_PARALLEL
    raise CubeInvariantError(f"flat {sorted(here)} is neither parallel nor anti-parallel to {i}")


def infinity_localization(cube_om: OrientedMatroid, i: int) -> Localization:
    """Position of the point at infinity of direction i: on every hyperplane
    parallel to i, and on the side of ``_{-i}(F-)`` for the others."""
    n = cube_dimension(cube_om.labels)
    bit = 1 << (i - 1)
    half = default_half_family(cube_om)
    idx = cube_om.ground.index
    sigma = []
    for p, m in half:
        zero = cube_om.ground.full & ~(p | m)
        kind = classify_flat(cube_om, zero, i)
        if kind is FlatKind.PARALLEL:
            sigma.append(0)
            continue
        verts = [x for x in cube_om.ground.elements(zero) if lab.is_vertex_label(x)]
        want = set()
        for x in verts:
            # image of F- must be positive, image of F+ negative
            target = 1 if lab.coordinate(x, i) < 0 else -1
            want.add(target * _sign_at((p, m), idx[lab.flip(x, bit)]))
        if len(want) != 1 or 0 in want:
            raise CubeInvariantError("anti-parallel hyperplane has no consistent side for the new point")
        sigma.append(want.pop())
    return Localization(cube_om, half, tuple(sigma))


def infinity_edge_circuits(n: int, i: int, ground: Ground) -> list[SignedSet]:
    """``({_{-i}v, y_i}, {v})`` for v on the facet x_i = +."""
    bit = 1 << (i - 1)
    out = []
    for a in range(1 << n):
        if a & bit:
            continue
        v = lab.vertex_label(a, n)
        out.append(SignedSet.from_labels(ground, [lab.flip(v, bit), lab.y_label(i)], [v]))
    return out


def extend_by_infinity(cube_om: OrientedMatroid, i: int) -> OrientedMatroid:
    n = cube_dimension(cube_om.labels)
    loc = infinity_localization(cube_om, i)
    report = is_localization(loc)
    if not report:
        raise CubeInvariantError("infinity position is not a localization: " + "; ".join(report.failures[:3]))
    out = extend(loc, lab.y_label(i))
    if len(cube_om.labels) != 1 << n:
        # points at infinity already present span new hyperplanes with y_i
        _check_infinity_edge_circuits(out, n, i)
        return out
    if len(out.hyperplanes) != len(cube_om.hyperplanes):
        raise CubeInvariantError("extension by a point at infinity created hyperplanes")
    if len(out.cocircuit_pairs) != len(cube_om.cocircuit_pairs):
        raise CubeInvariantError("extension by a point at infinity changed the cocircuit count")
    _check_infinity_edge_circuits(out, n, i)
    return out


def _check_infinity_edge_circuits(om: OrientedMatroid, n: int, i: int) -> None:
    for c in infinity_edge_circuits(n, i, om.ground):
        if not om.has_circuit(c):
            raise CubeInvariantError(f"expected circuit {c!r} is missing")


def cube_to_adjoint(cube_om: OrientedMatroid, order: Sequence[int] | None = None) -> OrientedMatroid:
    """Extend by all points at infinity (in the given axis order) and put
    the ground in canonical adjoint order."""
    n = cube_dimension(cube_om.labels)
    report = is_oriented_cube(cube_om)
    if not report:
        raise CubeInvariantError("not an oriented cube: " + "; ".join(report.failures[:3]))
    order = list(range(1, n + 1)) if order is None else list(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    om = cube_om
    for i in order:
        om = extend_by_infinity(om, i)
    return om.reordered(lab.adjoint_labels(n))


def adjoint_to_cube(adjoint_om: OrientedMatroid) -> OrientedMatroid:
    n = cube_dimension(adjoint_om.labels)
    report = is_adjoint(adjoint_om, n, "weak")
    if not report:
        raise OMError("not an adjoint: " + "; ".join(report.failures[:3]))
    return restriction(adjoint_om, lab.cube_labels(n)).reordered(lab.cube_labels(n))


def reorient_facet(cube_om: OrientedMatroid, i: int) -> OrientedMatroid:
    """Reverse all signs on the facet x_i = -."""
    n = cube_dimension(cube_om.labels)
    return cube_om.reoriented(_vertex_mask(cube_om, facet_mask(n, i, False), n))


def facet_reorientation_relabel(n: int, i: int) -> dict[str, str]:
    """Vertex relabelling ``v -> w`` with ``w(i) = v(i)`` and
    ``w(j) = v(i) v(j)``, under which a facet-reoriented cube is again an
    oriented cube."""
    out = {}
    for a in range(1 << n):
        v = lab.vertex_label(a, n)
        si = lab.coordinate(v, i)
        signs = []
        for j in range(1, n + 1):
            s = si if j == i else si * lab.coordinate(v, j)
            signs.append("+" if s > 0 else "-")
        out[v] = "v" + "".join(signs)
    return out


def skew_and_facet_masks(n: int, i: int) -> list[int]:
    """Cube-order masks of H_{i+-} and H_{ij+-} (j != i)."""
    out = [facet_mask(n, i, True), facet_mask(n, i, False)]
    for j in range(1, n + 1):
        if j != i:
            out += [skew_facet_mask(n, i, j, True), skew_facet_mask(n, i, j, False)]
    return out


# ---------------------------------------------------------------------------
# covectors of an adjoint as localizations in O_n


def covectors(om: OrientedMatroid, limit: int = 200_000) -> set[Pair]:
    """All covectors (compositions of cocircuits, with the zero vector)."""
    cos = set(om.cocircuit_pairs) | {_neg(x) for x in om.cocircuit_pairs}
    out = {(0, 0)} | cos
    frontier = set(cos)
    while frontier:
        nxt = set()
        for p, m in frontier:
            free = ~(p | m)
            for q, r in cos:
                c = (p | (q & free), m | (r & free))
                if c not in out:
                    nxt.add(c)
        out |= nxt
        if len(out) > limit:
            raise OverflowError("covector enumeration exceeds the scale guard")
        frontier = nxt
    return out


def principal_covectors(n: int, adjoint_om: OrientedMatroid) -> set[Pair]:
    """Compositions ``X~[e_1] o ... o X~[e_n]`` with e_k in {k, k'}, in every
    order of composition."""
    sig = dict(adjoint_signatures(n))
    out = set()
    for choice in range(1 << n):
        picks = [f"{k}'" if choice >> (k - 1) & 1 else str(k) for k in range(1, n + 1)]
        for order in permutations(picks):
            acc = SignedSet(adjoint_om.ground)
            for e in order:
                acc = acc.compose(_on(adjoint_om, sig[e]))
            out.add((acc.plus, acc.minus))
    return out


@dataclass
class CovectorReport(CheckReport):
    checked: int = 0


def check_covector_localizations(
    adjoint_om: OrientedMatroid,
    n: int,
    sign_vectors: Iterable[Pair] | None = None,
) -> CovectorReport:
    """Read each covector of the adjoint as a sign vector on the half family
    of O_n and test it as a localization there."""
    if set(adjoint_om.labels) != set(lab.adjoint_labels(n)):
        raise ValueError("ground is not the adjoint ground of O_n")
    base = cross_polytope(n)
    half = cross_half_family(n)
    pairs = tuple((d.plus, d.minus) for _, d in half)
    checker = _checker(base, pairs)
    idx = [adjoint_om.ground.index[name] for name, _ in half]
    vecs = covectors(adjoint_om) if sign_vectors is None else sign_vectors
    failures = []
    count = 0
    for vec in sorted(vecs):
        count += 1
        sigma = tuple(_sign_at(vec, k) for k in idx)
        rep = checker.check(sigma)
        if not rep:
            failures.append(f"{adjoint_om.signed(vec)!r}: {(rep.failures + rep.disagreements)[0]}")
    return CovectorReport(not failures, failures, count)
