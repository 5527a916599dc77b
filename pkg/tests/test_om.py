import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from omcube.generators import canonical_adjoint, cross_polytope, cross_polytope_plus_zero, real_cube
from omcube.labels import cube_labels
from omcube.om import (
    NotAHyperline,
    OMError,
    OrientedMatroid,
    check_orthogonality,
    circuits_from_cocircuits,
    cocircuits_from_circuits,
    contract_rank2,
    contraction,
    deletion,
    flats_of_corank,
    is_acyclic,
    isomorphism,
    lv_face_lattice,
    positive_cocircuits,
    rank,
    reorientation_isomorphism,
    restriction,
    validate_circuit_axioms,
)
from omcube.realization import PointConfig, cube_points, om_from_points
from omcube.signed import Ground, SignedSet


def S(om, plus=(), minus=()):
    return SignedSet.from_labels(om.ground, plus, minus)


planar = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=6, unique=True
)


def config(points):
    return PointConfig.make("affine", [(f"p{k}", p) for k, p in enumerate(points)])


# -- circuit axioms -------------------------------------------------------------


def test_cross_polytope_3_circuits_valid():
    om = cross_polytope(3)
    assert validate_circuit_axioms(om.circuit_pairs, om.ground) == []


def test_nested_supports_flagged():
    g = Ground(["1", "2"])
    problems = validate_circuit_axioms([(0b01, 0b10), (0b01, 0)], g)
    assert any(p.startswith("incomparability") for p in problems)


def test_negation_is_implicit():
    g = Ground(["1", "2"])
    assert validate_circuit_axioms([(0b01, 0b10)], g) == []


def test_elimination_violation_flagged():
    # two circuits through e with opposite signs but nothing eliminating e
    g = Ground(["a", "b", "c", "d"])
    fam = [(g.mask("ab"), 0), (g.mask("c"), g.mask("a"))]
    assert any(p.startswith("elimination") for p in validate_circuit_axioms(fam, g))


def test_large_families_use_the_orthogonality_certificate():
    om = canonical_adjoint(4)
    assert validate_circuit_axioms(om.circuit_pairs, om.ground, om.cocircuit_pairs) == []
    p, m = min(om.circuit_pairs, key=lambda c: (bin(c[0] | c[1]).count("1"), c))
    low = m & -m
    broken = (om.circuit_pairs - {(p, m)}) | {(p | low, m & ~low)}
    assert validate_circuit_axioms(broken, om.ground, om.cocircuit_pairs)


# -- rank, flats and hyperplanes ----------------------------------------------


def test_rank_of_cross_polytope_2():
    assert rank(cross_polytope(2)) == 3


def test_rank_of_real_cube_3():
    c = cube_points(3)
    assert rank(real_cube(3)) == oracle.rank(oracle.lifted([c.point(v) for v in cube_labels(3)])) == 4


def test_free_matroid_rank():
    assert rank(OrientedMatroid(["a", "b", "c", "d"], circuits=[])) == 4


def test_cross_polytope_2_hyperplanes():
    om = cross_polytope(2)
    planes = {frozenset(om.ground.elements(h)) for h in flats_of_corank_masks(om)}
    types_a = {frozenset({"1'", "2'"}), frozenset({"1", "2'"}), frozenset({"2", "1'"}), frozenset({"1", "2"})}
    types_b = {frozenset({"2", "2'"}), frozenset({"1", "1'"})}
    assert planes == types_a | types_b


def flats_of_corank_masks(om):
    return {om.mask(f.elements) for f in flats_of_corank(om, 1)}


def test_cross_polytope_3_has_eleven_hyperplanes():
    assert len(flats_of_corank(cross_polytope(3), 1)) == 11


def test_rank_2_hyperplanes_are_point_classes():
    # a, b parallel; c alone
    om = om_from_points(PointConfig.make("linear", [("a", [1, 0]), ("b", [2, 0]), ("c", [0, 1])]))
    planes = {frozenset(f.elements) for f in flats_of_corank(om, 1)}
    assert planes == {frozenset("ab"), frozenset("c")}


# -- rank-2 contractions --------------------------------------------------------


def test_contract_cross_polytope_hyperline():
    om = cross_polytope(2)
    got = {(x.plus_labels, x.minus_labels) for x in contract_rank2(om, om.mask(["2'"]))}
    assert got == {((), ("1", "2")), ((), ("2", "1'")), (("1",), ("1'",))}


def test_contract_cube_vertex_hyperline():
    om = real_cube(2)
    c = cube_points(2)
    vectors = oracle.lifted([c.point(v) for v in om.labels])
    through = {s[1:] for s in oracle.cocircuits(vectors) if s[0] == 0}
    got = contract_rank2(om, om.mask(["v++"]))
    assert oracle.signed_family(got, om.labels[1:]) == through


def test_contract_by_hyperplane_rejected():
    om = cross_polytope(2)
    with pytest.raises(NotAHyperline):
        contract_rank2(om, om.mask(["2", "2'"]))


# -- minors ---------------------------------------------------------------------


def test_restriction_to_ground():
    om = cross_polytope(3)
    assert restriction(om, om.labels) == om


def test_adjoint_restricted_to_vertices_is_rank_3_cube():
    a = canonical_adjoint(2)
    sub = restriction(a, cube_labels(2))
    assert rank(sub) == 3
    assert sub == real_cube(2)


def test_restriction_to_nothing():
    sub = restriction(cross_polytope(2), [])
    assert sub.rank == 0 and sub.labels == ()


def test_deleting_the_origin():
    assert deletion(cross_polytope_plus_zero(3), ["0"]) == cross_polytope(3)


def test_contraction_rank_drops():
    om = cross_polytope(3)
    assert contraction(om, ["1"]).rank == 3


# -- duality ----------------------------------------------------------------------


def test_cross_polytope_2_cocircuits_from_circuits():
    om = cross_polytope(2)
    derived = cocircuits_from_circuits(OrientedMatroid(om.ground, circuits=om.circuits))
    assert 2 * len(derived) == 12
    assert derived == om.cocircuits


def test_free_matroid_cocircuits_are_singletons():
    om = OrientedMatroid(["a", "b", "c"], circuits=[])
    assert cocircuits_from_circuits(om) == {S(om, [], [e]) for e in "abc"}


def test_real_cube_2_cocircuits_match_oracle():
    # every pair of the 4 vertices spans a line, so there are 6 hyperplanes
    om = real_cube(2)
    c = cube_points(2)
    expected = oracle.cocircuits(oracle.lifted([c.point(v) for v in om.labels]))
    assert len(expected) == 12
    assert oracle.signed_family(cocircuits_from_circuits(om), om.labels) == expected


def test_circuits_from_cocircuits_roundtrip():
    om = canonical_adjoint(2)
    only_co = OrientedMatroid(om.ground, cocircuits=om.cocircuits)
    assert circuits_from_cocircuits(only_co) == om.circuits


@given(planar)
def test_realized_families_match_oracle(points):
    cfg = config(points)
    om = om_from_points(cfg)
    vectors = oracle.lifted(points)
    assert om.rank == oracle.rank(vectors)
    assert oracle.signed_family(om.circuits, om.labels) == oracle.circuits(vectors)
    assert oracle.signed_family(om.cocircuits, om.labels) == oracle.cocircuits(vectors)
    assert check_orthogonality(om) == []
    assert validate_circuit_axioms(om.circuit_pairs, om.ground) == []


# -- acyclicity and faces ---------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
def test_real_cube_acyclic(n):
    assert is_acyclic(real_cube(n))


def test_positive_circuit_makes_cyclic():
    om = OrientedMatroid(["a", "b"], circuits=[(0b11, 0)])
    assert not is_acyclic(om)


def test_cross_polytope_acyclic():
    assert is_acyclic(cross_polytope(2))


@pytest.mark.parametrize("n", [2, 3])
def test_positive_cocircuits_of_cross_polytope(n):
    om = cross_polytope(n)
    # one positive cocircuit per choice of a signed coordinate vertex set
    got = positive_cocircuits(om)
    assert len(got) == 2**n
    for x in got:
        assert x.minus == 0 and all(
            (str(i) in x.plus_labels) != (f"{i}'" in x.plus_labels) for i in range(1, n + 1)
        )


def test_totally_cyclic_has_no_positive_cocircuit():
    # e1, e2, -e1-e2 in the plane
    om = om_from_points(PointConfig.make("linear", [("a", [1, 0]), ("b", [0, 1]), ("c", [-1, -1])]))
    assert positive_cocircuits(om) == set()


def test_adjoint_positive_cocircuits():
    from omcube.extensions import adjoint_signatures, x_tilde_zero

    n = 3
    om = canonical_adjoint(n)
    pos = positive_cocircuits(om)
    assert x_tilde_zero(n) in pos
    for name, x in adjoint_signatures(n):
        if not name.endswith("'"):
            assert x in pos


def test_adjoint_face_lattice_is_simplex():
    n = 3
    faces = lv_face_lattice(canonical_adjoint(n))
    assert faces.is_simplex_on(["y1", "y2", "y3", "v---"])


def test_quadrilateral_face_lattice():
    faces = lv_face_lattice(real_cube(2))
    assert len(faces.vertices) == 4 and len(faces.facets) == 4
    assert len(faces.faces) == 10
    assert not faces.is_simplex_on(cube_labels(2))


def test_rank_1_face_lattice():
    faces = lv_face_lattice(OrientedMatroid(["a"], circuits=[]))
    assert len(faces.faces) == 2


# -- isomorphism ------------------------------------------------------------------


def test_self_isomorphism_is_identity():
    om = cross_polytope(3)
    assert isomorphism(om, om) == {e: e for e in om.labels}


def test_relabelled_copy():
    om = cross_polytope(2)
    mapping = {"1": "a", "2": "b", "1'": "c", "2'": "d"}
    copy = om.relabel(mapping)
    found = isomorphism(om, copy)
    assert found is not None and om.relabel(found) == copy


def test_square_and_cross_polytope_2_are_isomorphic():
    # both are four points in convex position in the plane
    assert isomorphism(real_cube(2), cross_polytope(2)) is not None


def test_non_isomorphic_pair():
    assert isomorphism(real_cube(3), cross_polytope_plus_zero(3)) is None
    assert isomorphism(cross_polytope(3), cross_polytope_plus_zero(2)) is None


@pytest.mark.parametrize("seed", range(5))
def test_reorientation_isomorphism_recovers_reorientation(seed):
    rng = random.Random(seed)
    om = real_cube(3)
    flip = [e for e in om.labels if rng.random() < 0.5]
    perm = list(om.labels)
    rng.shuffle(perm)
    target = om.reoriented(flip).relabel(dict(zip(om.labels, perm)), perm)
    found = reorientation_isomorphism(om, target)
    assert found is not None
    mapping, flipped = found
    assert om.reoriented(flipped).relabel(mapping) == target.reordered(list(mapping.values()))


def test_reorientation_needed():
    om = real_cube(2)
    assert isomorphism(om, om.reoriented(["v++"])) is None
    assert reorientation_isomorphism(om, om.reoriented(["v++"])) is not None


# -- construction ------------------------------------------------------------------


def test_declared_rank_checked():
    with pytest.raises(OMError):
        OrientedMatroid(cross_polytope(2).ground, cocircuits=cross_polytope(2).cocircuits, rank=4)


def test_needs_a_family():
    with pytest.raises(OMError):
        OrientedMatroid(["a"])


@given(st.sets(st.sampled_from(cube_labels(3))))
def test_reorientation_involution(flip):
    om = real_cube(3)
    assert om.reoriented(flip).reoriented(flip) == om
