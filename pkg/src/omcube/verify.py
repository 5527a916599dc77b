"""Registered checks over the generated objects, run as one suite.

Each claim is a function of n returning ``(ok, witness)``.  Claims carry an
n-range; outside it they are reported as skipped with the reason, which is
how enumeration-bound checks behave for large n.
"""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable

from . import labels as lab
from .extensions import (
    CubeInvariantError,
    Localization,
    adjoint_to_cube,
    check_covector_localizations,
    classify_flat,
    cross_half_family,
    cube_to_adjoint,
    extend,
    extend_by_infinity,
    infinity_localization,
    is_adjoint,
    is_localization,
    is_oriented_cube,
    principal_covectors,
    infinity_edge_circuits,
    x_tilde_zero,
)
from .generators import (
    MAX_ENUMERATED_N,
    canonical_adjoint,
    cross_polytope,
    cross_polytope_plus_zero,
    cross_polytope_sign_conflicts,
    real_cube,
)
from .om import (
    OrientedMatroid,
    check_orthogonality,
    contraction,
    is_acyclic,
    isomorphism,
    lv_face_lattice,
    positive_cocircuits,
    restriction,
    validate_circuit_axioms,
)
from .realization import (
    PointConfig,
    adjoint_realization_from_cube,
    barycentric_adjoint,
    center,
    cube_points,
    diagonals,
    facet_centers_polar,
    in_open_segment,
    interior_point_adjoint,
    lifted_adjoint_vectors,
    om_from_points,
    projective_map,
    segments_meet,
)
from .signed import Ground, SignedSet

SEED = 20240607


@dataclass
class ClaimResult:
    claim: str
    status: str  # pass | fail | skip
    witness: str
    seconds: float = 0.0


@dataclass
class VerificationReport:
    n: int
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    @property
    def failed(self) -> list[ClaimResult]:
        return [r for r in self.results if r.status == "fail"]

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "results": [asdict(r) for r in self.results]}


@dataclass(frozen=True)
class Claim:
    id: str
    check: Callable[[int], tuple[bool, str]]
    n_min: int = 2
    n_max: int | None = MAX_ENUMERATED_N


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, n_min: int = 2, n_max: int | None = MAX_ENUMERATED_N):
    def deco(fn):
        REGISTRY[cid] = Claim(cid, fn, n_min, n_max)
        return fn

    return deco


# ---------------------------------------------------------------------------
# helpers


def cross_polytope_points(n: int) -> PointConfig:
    pts = []
    for i in range(1, n + 1):
        pts.append((str(i), [int(j == i) for j in range(1, n + 1)]))
    for i in range(1, n + 1):
        pts.append((f"{i}'", [-int(j == i) for j in range(1, n + 1)]))
    return PointConfig.make("affine", pts)


def cross_plus_zero_any(m: int) -> OrientedMatroid:
    """O_m with the origin added; realized directly so that m = 1 works."""
    if m >= 2:
        return cross_polytope_plus_zero(m)
    return om_from_points(PointConfig.make("affine", [("1", [1]), ("1'", [-1]), ("0", [0])]))


def random_interior_point(n: int, rng: random.Random) -> list[Fraction]:
    weights = [rng.randint(1, 9) for _ in range(n + 1)]
    total = sum(weights)
    return [Fraction(w, total) for w in weights[:n]]


def random_admissible_matrix(n: int, rng: random.Random) -> list[list[Fraction]]:
    """A projective map with positive denominators on [-1, 1]^n: dominant
    diagonal and a last row whose constant beats the linear part."""
    a = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        a[i][i] += 6
    b = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    c = [Fraction(rng.randint(-3, 3), rng.randint(2, 5)) for _ in range(n)]
    d = sum(abs(x) for x in c) + 1
    return [a[i] + [b[i]] for i in range(n)] + [c + [d]]


def adjoint_hyperplane_relabel(n: int, i: int, positive: bool) -> tuple[list[str], dict[str, str]]:
    """Elements on the zero set of X~[i] (or X~[i']) and their labels in the
    adjoint ground of dimension n-1."""
    keep, mapping = [], {}
    others = [j for j in range(1, n + 1) if j != i]
    for k, j in enumerate(others, start=1):
        keep.append(lab.y_label(j))
        mapping[lab.y_label(j)] = lab.y_label(k)
    for a in range(1 << n):
        label = lab.vertex_label(a, n)
        if (lab.coordinate(label, i) < 0) == positive:
            keep.append(label)
            mapping[label] = "v" + "".join(label[1 + j - 1] for j in others)
    return keep, mapping


def _all_generated(n: int) -> list[tuple[str, OrientedMatroid]]:
    out = [("cross_polytope", cross_polytope(n)), ("cross_polytope_plus_zero", cross_polytope_plus_zero(n))]
    if n <= MAX_ENUMERATED_N:
        out += [("real_cube", real_cube(n)), ("canonical_adjoint", canonical_adjoint(n))]
    if n <= 3:
        q = real_cube(n)
        out += [(f"extend_by_infinity_{i}", extend_by_infinity(q, i)) for i in range(1, n + 1)]
        out.append(("adjoint_to_cube", adjoint_to_cube(canonical_adjoint(n))))
        rng = random.Random(SEED)
        for k in range(3):
            img = projective_map(cube_points(n), random_admissible_matrix(n, rng))
            out.append((f"transformed_cube_{k}", om_from_points(img)))
    return out


# ---------------------------------------------------------------------------
# generators


@claim("cross-polytope.cocircuit-family", n_max=None)
def _cross_cocircuits(n):
    om = cross_polytope(n)
    expected = 2 * ((1 << n) + n)
    count = 2 * len(om.cocircuit_pairs)
    realized = om_from_points(cross_polytope_points(n))
    ok = count == expected and realized.cocircuit_pairs == om.cocircuit_pairs
    return ok, f"{count} signed cocircuits (expected {expected}); realization agrees: {realized.cocircuit_pairs == om.cocircuit_pairs}"


@claim("cross-polytope.circuits-from-realization", n_max=None)
def _cross_circuits(n):
    om = cross_polytope(n)
    realized = om_from_points(cross_polytope_points(n))
    conflicts = cross_polytope_sign_conflicts(n)
    ok = realized.circuit_pairs == om.circuit_pairs and realized.check_witnesses()
    return ok, f"{len(om.circuit_pairs)} circuit pairs; same-side signing conflicts flagged: {len(conflicts)}"


# ---------------------------------------------------------------------------
# canonical adjoint


@claim("adjoint.three-constructions-agree")
def _adjoint_constructions(n):
    rng = random.Random(SEED + n)
    lin = om_from_points(lifted_adjoint_vectors(n))
    bary = om_from_points(barycentric_adjoint(n))
    points = set()
    while len(points) < 3:
        points.add(tuple(random_interior_point(n, rng)))
    others = [om_from_points(interior_point_adjoint(n, None, list(c))) for c in sorted(points)]
    ok = lin == canonical_adjoint(n) and bary == lin and all(o == lin for o in others)
    return ok, f"linear, barycentric and 3 interior-point constructions equal: {ok}"


@claim("adjoint.edge-circuits-present")
def _adjoint_edge_circuits(n):
    om = canonical_adjoint(n)
    g = om.ground
    missing = []
    for i in range(1, n + 1):
        for a in range(1 << n):
            if a >> (i - 1) & 1:
                continue
            c = SignedSet.from_labels(
                g, [lab.y_label(i), lab.vertex_label(a | 1 << (i - 1), n)], [lab.vertex_label(a, n)]
            )
            if not om.has_circuit(c):
                missing.append(repr(c))
    return not missing, f"{n << (n - 1)} circuits checked; missing: {missing[:3]}"


@claim("adjoint.acyclic-simplex-face-lattice")
def _adjoint_faces(n):
    om = canonical_adjoint(n)
    if not is_acyclic(om):
        return False, "adjoint has a positive circuit"
    faces = lv_face_lattice(om)
    verts = lab.y_labels(n) + [lab.vertex_label((1 << n) - 1, n)]
    simplex = faces.is_simplex_on(verts)
    y_facet = any(set(faces.labels(f)) == set(lab.y_labels(n)) for f in faces.facets)
    positive = x_tilde_zero(n) in positive_cocircuits(om)
    ok = simplex and y_facet and positive
    return ok, f"simplex on {verts}: {simplex}; Y facet: {y_facet}; X~[0] positive cocircuit: {positive}"


@claim("adjoint.extension-by-zero-counts")
def _adjoint_extension(n):
    base = cross_polytope(n)
    half = cross_half_family(n)
    sigma = tuple(0 if name.startswith("y") else 1 for name, _ in half)
    loc = Localization(base, tuple((d.plus, d.minus) for _, d in half), sigma)
    rep = is_localization(loc)
    if not rep:
        return False, f"X~[0] is not a localization: {rep.failures[:1]}"
    ext = extend(loc, "0")
    hyp, coc = len(ext.hyperplanes), 2 * len(ext.cocircuit_pairs)
    ok = (
        hyp == (1 << n) + n == len(base.hyperplanes)
        and coc == 2 * ((1 << n) + n) == 2 * len(base.cocircuit_pairs)
        and ext == cross_polytope_plus_zero(n)
    )
    return ok, f"hyperplanes {hyp}, signed cocircuits {coc}, equals O_n with origin: {ext == cross_polytope_plus_zero(n)}"


@claim("adjoint.contractions-and-hyperplane-restrictions")
def _adjoint_minors(n):
    base = cross_polytope(n)
    target = cross_plus_zero_any(n - 1)
    problems = []
    for i in range(1, n + 1):
        for e in (str(i), f"{i}'"):
            if isomorphism(contraction(base, [e]), target) is None:
                problems.append(f"O_n/{e} not isomorphic to O_(n-1) with origin")
    adj = canonical_adjoint(n)
    for i in range(1, n + 1):
        for positive in (True, False):
            keep, mapping = adjoint_hyperplane_relabel(n, i, positive)
            sub = restriction(adj, keep).relabel(mapping, lab.adjoint_labels(n - 1))
            if not is_adjoint(sub, n - 1):
                problems.append(f"restriction to H~[{i}{'' if positive else chr(39)}] is not an adjoint")
    return not problems, "; ".join(problems) or f"{2 * n} contractions and {2 * n} restrictions pass"


@claim("adjoint.weak-and-strong-conditions")
def _adjoint_conditions(n):
    om = canonical_adjoint(n)
    weak, strong = is_adjoint(om, n, "weak"), is_adjoint(om, n, "strong")
    corrupt = om.reoriented([lab.vertex_label(0, n)])
    neg = is_adjoint(corrupt, n, "weak")
    ok = bool(weak) and bool(strong) and not neg
    return ok, f"weak {bool(weak)}, strong {bool(strong)}, corrupted copy rejected: {not neg}"


# ---------------------------------------------------------------------------
# cubes and the bijection


@claim("cube.adjoint-bijection-roundtrip", n_max=3)
def _roundtrip(n):
    q, a = real_cube(n), canonical_adjoint(n)
    c = adjoint_to_cube(a)
    a2 = cube_to_adjoint(q)
    ok = (
        bool(is_oriented_cube(c))
        and isomorphism(c, q) is not None
        and isomorphism(a2, a) is not None
        and adjoint_to_cube(a2) == q
        and cube_to_adjoint(c) == a
    )
    return ok, f"cube check {bool(is_oriented_cube(c))}, both compositions identities: {ok}"


@claim("cube.extension-order-immaterial", n_max=3)
def _orders(n):
    q = real_cube(n)
    results = {cube_to_adjoint(q, list(order)) for order in permutations(range(1, n + 1))}
    return len(results) == 1, f"{len(list(permutations(range(n))))} axis orders give {len(results)} distinct result(s)"


@claim("cube.flat-dichotomy", n_max=3)
def _dichotomy(n):
    q = real_cube(n)
    counts = {}
    try:
        for flat in q.flats():
            for i in range(1, n + 1):
                kind = classify_flat(q, flat, i)
                counts[kind.name] = counts.get(kind.name, 0) + 1
    except CubeInvariantError as exc:
        return False, f"third case: {exc}"
    return True, f"(flat, axis) pairs by kind: {dict(sorted(counts.items()))}"


@claim("cube.infinity-extensions", n_max=3)
def _infinity(n):
    q = real_cube(n)
    problems = []
    for i in range(1, n + 1):
        rep = is_localization(infinity_localization(q, i))
        if not rep:
            problems.append(f"axis {i}: {rep.failures[:1]}")
            continue
        ext = extend_by_infinity(q, i)
        if len(ext.hyperplanes) != len(q.hyperplanes) or len(ext.cocircuit_pairs) != len(q.cocircuit_pairs):
            problems.append(f"axis {i}: counts changed")
        missing = [c for c in infinity_edge_circuits(n, i, ext.ground) if not ext.has_circuit(c)]
        if missing:
            problems.append(f"axis {i}: missing {missing[0]!r}")
    return not problems, "; ".join(problems) or f"{n} axes: localizations, counts and edge circuits hold"


# ---------------------------------------------------------------------------
# realizations


TRANSFORMS = 20


@claim("realization.projective-images-of-the-cube", n_max=3)
def _projective(n):
    rng = random.Random(SEED)
    q, a = real_cube(n), canonical_adjoint(n)
    problems = []
    for k in range(TRANSFORMS):
        m = random_admissible_matrix(n, rng)
        img = projective_map(cube_points(n), m)
        if isomorphism(om_from_points(img), q) is None:
            problems.append(f"transform {k}: cube not preserved")
            continue
        o = center(img)
        if not all(in_open_segment(o, img.point(u), img.point(v)) for u, v in diagonals(n)):
            problems.append(f"transform {k}: center off a diagonal")
        if n >= 3:
            polar = facet_centers_polar(img)
            if isomorphism(polar, cross_polytope(n)) is None:
                problems.append(f"transform {k}: facet centers not a cross-polytope")
        if isomorphism(om_from_points(adjoint_realization_from_cube(img)), a) is None:
            problems.append(f"transform {k}: adjoint realization differs")
    return not problems, "; ".join(problems[:3]) or f"{TRANSFORMS} random admissible transforms pass"


# ---------------------------------------------------------------------------
# covectors as localizations


@claim("covectors.are-localizations")
def _covectors(n):
    a = canonical_adjoint(n)
    if n == 2:
        rep = check_covector_localizations(a, n)
        what = "all covectors"
    else:
        vecs = set(a.cocircuit_pairs) | {(m, p) for p, m in a.cocircuit_pairs} | principal_covectors(n, a)
        rep = check_covector_localizations(a, n, vecs)
        what = "cocircuits and principal covectors"
    return bool(rep), f"{what}: {rep.checked} checked, failures {rep.failures[:1]}"


# ---------------------------------------------------------------------------
# cross-representation invariant


@claim("invariant.orthogonality-and-circuit-axioms", n_max=None)
def _invariant(n):
    problems = []
    names = []
    for name, om in _all_generated(n):
        names.append(name)
        bad = check_orthogonality(om)
        if bad:
            problems.append(f"{name}: {len(bad)} non-orthogonal pairs")
        viol = validate_circuit_axioms(om.circuit_pairs, om.ground, om.cocircuit_pairs)
        if viol:
            problems.append(f"{name}: {viol[0]}")
    return not problems, "; ".join(problems[:3]) or f"{len(names)} oriented matroids pass"


# ---------------------------------------------------------------------------
# search harness


@claim("search.cube-and-adjoint-enumeration", n_max=3)
def _search(n):
    from .search import search_with_classes

    cubes, cube_reps = search_with_classes("cubes", n, "exhaustive", 120.0)
    adjs, adj_reps = search_with_classes("adjoints", n, "exhaustive", 120.0)
    counts_match = cubes.isomorphism_classes == adjs.isomorphism_classes
    ok = counts_match and all(is_oriented_cube(om) for om in cube_reps)
    if n == 2:
        ok = ok and cubes.complete and adjs.complete and cubes.isomorphism_classes == 1
        ok = ok and isomorphism(cube_reps[0], real_cube(2)) is not None
        ok = ok and isomorphism(adj_reps[0], canonical_adjoint(2)) is not None
    return ok, (
        f"cubes: {cubes.isomorphism_classes} class(es), {cubes.completeness_flag}; "
        f"adjoints: {adjs.isomorphism_classes} class(es) (strong {adjs.classes_strong}), {adjs.completeness_flag}"
    )


# ---------------------------------------------------------------------------


def verify_suite(n: int, only: list[str] | None = None) -> VerificationReport:
    report = VerificationReport(n)
    for cid, c in REGISTRY.items():
        if only and cid not in only:
            continue
        if n < c.n_min or (c.n_max is not None and n > c.n_max):
            bound = f"{c.n_min}..{c.n_max}" if c.n_max is not None else f">= {c.n_min}"
            report.results.append(ClaimResult(cid, "skip", f"scale guard: n={n} outside {bound}"))
            continue
        start = time.monotonic()
        try:
            ok, witness = c.check(n)
        except Exception as exc:  # a crash is a failed claim, not a crashed suite
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        report.results.append(ClaimResult(cid, "pass" if ok else "fail", witness, round(time.monotonic() - start, 3)))
    return report
