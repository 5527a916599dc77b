import pytest

import oracle
from omcube.generators import (
    MAX_ENUMERATED_N,
    canonical_adjoint,
    cross_polytope,
    cross_polytope_plus_zero,
    cross_polytope_sign_conflicts,
    facet_mask,
    same_side_cross_circuits,
    real_cube,
    rectangles,
    smallest_cocircuits,
)
from omcube.labels import adjoint_labels, cross_labels, cube_labels
from omcube.om import check_orthogonality, deletion, validate_circuit_axioms
from omcube.realization import cube_points, lifted_adjoint_vectors
from omcube.signed import SignedSet


def cross_points(n):
    pts = []
    for sign in (1, -1):
        for i in range(n):
            pts.append([sign * int(j == i) for j in range(n)])
    return pts


# -- cross-polytope ---------------------------------------------------------------


def test_cross_polytope_2_named_cocircuits():
    om = cross_polytope(2)
    g = om.ground
    assert om.has_cocircuit(SignedSet.from_labels(g, ["1"], ["1'"]))
    assert om.has_cocircuit(SignedSet.from_labels(g, ["1", "2"]))
    assert om.has_cocircuit(SignedSet.from_labels(g, ["2", "1'"]))


def test_cross_polytope_2_single_circuit_from_realization():
    om = cross_polytope(2)
    expected = oracle.circuits(oracle.lifted(cross_points(2)))
    assert oracle.signed_family(om.circuits, om.labels) == expected
    assert om.circuits == {SignedSet.from_labels(om.ground, ["1", "1'"], ["2", "2'"])}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cross_polytope_counts(n):
    om = cross_polytope(n)
    assert om.labels == tuple(cross_labels(n))
    assert len(om.hyperplanes) == 2**n + n
    assert 2 * len(om.cocircuits) == 2 * (2**n + n)
    assert len(om.circuits) == n * (n - 1) // 2
    assert om.rank == n + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cross_polytope_matches_oracle(n):
    om = cross_polytope(n)
    vectors = oracle.lifted(cross_points(n))
    assert oracle.signed_family(om.cocircuits, om.labels) == oracle.cocircuits(vectors)
    assert oracle.signed_family(om.circuits, om.labels) == oracle.circuits(vectors)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_same_side_signing_conflicts(n):
    # the same-side signing fails orthogonality; every such circuit is flagged
    conflicts = cross_polytope_sign_conflicts(n)
    assert len(conflicts) == len(same_side_cross_circuits(n)) == n * (n - 1) // 2
    for c in conflicts:
        assert not c.rejected.orthogonal(c.conflicts_with)
        assert c.adopted.support == c.rejected.support


def test_cross_polytope_plus_zero():
    om = cross_polytope_plus_zero(2)
    assert len(om.hyperplanes) == 6 and 2 * len(om.cocircuits) == 12
    assert deletion(om, ["0"]) == cross_polytope(2)


def test_rejects_small_n():
    with pytest.raises(ValueError):
        cross_polytope(1)
    with pytest.raises(ValueError):
        real_cube(0)


# -- real cube ----------------------------------------------------------------------


def test_real_cube_2_single_circuit():
    om = real_cube(2)
    assert om.circuits == {SignedSet.from_labels(om.ground, ["v++", "v--"], ["v-+", "v+-"])}


def test_real_cube_2_cocircuit_count():
    assert 2 * len(real_cube(2).cocircuits) == 12


@pytest.mark.parametrize("n", [2, 3])
def test_real_cube_matches_oracle(n):
    om = real_cube(n)
    c = cube_points(n)
    vectors = oracle.lifted([c.point(v) for v in cube_labels(n)])
    assert oracle.signed_family(om.cocircuits, om.labels) == oracle.cocircuits(vectors)
    assert oracle.signed_family(om.circuits, om.labels) == oracle.circuits(vectors)


def test_real_cube_beyond_bound():
    with pytest.raises(ValueError):
        real_cube(MAX_ENUMERATED_N + 1)


def test_rectangle_formula_example():
    g = real_cube(2).ground
    assert rectangles(2) == {SignedSet.from_labels(g, ["v++", "v--"], ["v-+", "v+-"]).canonical()}


@pytest.mark.parametrize("n,count", [(2, 1), (3, 6 + 6), (4, None)])
def test_rectangles_are_circuits(n, count):
    rects = rectangles(n)
    if count is not None:
        # n=3: 6 faces and 6 diagonal rectangles
        assert len(rects) == count
    om = real_cube(n)
    assert all(om.has_circuit(r) for r in rects)


def test_facet_cocircuit_example():
    g = real_cube(2).ground
    x = next(d for d in smallest_cocircuits(2) if d.support == g.mask(["v-+", "v--"]))
    assert x.sign("v-+") == x.sign("v--")
    assert facet_mask(2, 1, True) == g.mask(["v++", "v+-"])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_smallest_cocircuit_counts(n):
    assert len(smallest_cocircuits(n)) == 2 * n
    assert len(smallest_cocircuits(n, include_skew=True)) == 2 * n + n * (n - 1)
    om = real_cube(n)
    assert all(om.has_cocircuit(d) for d in smallest_cocircuits(n, include_skew=True))


# -- canonical adjoint -------------------------------------------------------------


def test_canonical_adjoint_2_shape():
    om = canonical_adjoint(2)
    assert om.labels == tuple(adjoint_labels(2))
    assert om.rank == 3 and om.n == 6


@pytest.mark.parametrize("n", [2, 3])
def test_canonical_adjoint_matches_oracle(n):
    om = canonical_adjoint(n)
    cfg = lifted_adjoint_vectors(n)
    vectors = [list(map(float, cfg.point(e))) for e in om.labels]
    assert oracle.signed_family(om.cocircuits, om.labels) == oracle.cocircuits(vectors)


@pytest.mark.parametrize(
    "make,n", [(cross_polytope, 3), (cross_polytope_plus_zero, 3), (real_cube, 3), (canonical_adjoint, 3)]
)
def test_generated_families_are_consistent(make, n):
    om = make(n)
    assert check_orthogonality(om) == []
    assert validate_circuit_axioms(om.circuit_pairs, om.ground, om.cocircuit_pairs) == []
