import pytest
from hypothesis import given
from hypothesis import strategies as st

from omcube.signed import Ground, SignedSet, canonical_pair, canonical_rep, compose, orthogonal, reorient, restrict

G = Ground(["a", "b", "c", "d", "e"])
O2 = Ground(["1", "2", "1'", "2'"])


def S(plus=(), minus=(), ground=G):
    return SignedSet.from_labels(ground, plus, minus)


sign_vectors = st.lists(st.sampled_from([-1, 0, 1]), min_size=len(G), max_size=len(G))
signed_sets = sign_vectors.map(lambda v: SignedSet.from_vector(G, v))
subsets = st.sets(st.sampled_from(G.labels))


# -- composition --------------------------------------------------------------


def test_compose_first_nonzero_wins():
    assert compose(S("a", "b"), S("bc")) == S("ac", "b")


def test_compose_idempotent_example():
    x = S("ac", "b")
    assert compose(x, x) == x


def test_zero_is_left_identity():
    y = S("bc", "e")
    assert compose(S(), y) == y


@given(signed_sets, signed_sets)
def test_compose_matches_sign_vector_rule(x, y):
    expected = tuple(a if a else b for a, b in zip(x.vector(), y.vector()))
    assert compose(x, y).vector() == expected


@given(signed_sets, signed_sets, signed_sets)
def test_compose_associative(x, y, z):
    assert compose(compose(x, y), z) == compose(x, compose(y, z))


@given(signed_sets)
def test_compose_idempotent(x):
    assert compose(x, x) == x


def test_compose_rejects_other_ground():
    with pytest.raises(ValueError):
        compose(S("a"), S("1", ground=O2))


# -- orthogonality --------------------------------------------------------------


def test_orthogonal_cross_polytope_circuit_and_cocircuit():
    assert orthogonal(S(["1", "1'"], ["2", "2'"], O2), S(["1"], ["1'"], O2))


def test_disjoint_supports_are_orthogonal():
    assert orthogonal(S("ab"), S("c", "d"))


def test_single_positive_product_is_not_orthogonal():
    assert not orthogonal(S("a"), S("a"))


@given(signed_sets, signed_sets)
def test_orthogonality_definition(x, y):
    products = {a * b for a, b in zip(x.vector(), y.vector())} - {0}
    assert orthogonal(x, y) == (products in (set(), {1, -1}))


@given(signed_sets, signed_sets)
def test_orthogonality_symmetric_and_sign_invariant(x, y):
    assert orthogonal(x, y) == orthogonal(y, x) == orthogonal(-x, y)


# -- reorientation and restriction ----------------------------------------------


def test_reorient_example():
    g = Ground(["1", "2"])
    assert reorient(S("1", "2", g), {"2"}) == S("12", ground=g)


def test_reorient_by_nothing():
    x = S("ab", "c")
    assert reorient(x, ()) == x


@given(signed_sets, subsets)
def test_reorient_involution(x, a):
    assert reorient(reorient(x, a), a) == x


@given(signed_sets, subsets)
def test_reorient_flips_exactly_a(x, a):
    y = reorient(x, a)
    for e in G:
        assert y.sign(e) == (-x.sign(e) if e in a else x.sign(e))


def test_restrict_example():
    x = S(["1", "2"], ["1'"], O2)
    r = restrict(x, ["1", "1'"])
    assert r.plus_labels == ("1",) and r.minus_labels == ("1'",)
    assert r.ground.labels == ("1", "1'")


def test_restrict_to_ground_is_identity():
    x = S("ab", "e")
    assert restrict(x, G.labels) == x


def test_restrict_to_empty():
    r = restrict(S("ab", "e"), [])
    assert len(r.ground) == 0 and r.is_zero


def test_restrict_unknown_label():
    with pytest.raises(KeyError):
        restrict(S("a"), ["z"])


# -- canonical representative ---------------------------------------------------


def test_canonical_prefers_negation_when_smaller():
    g = Ground(["1", "2"])
    assert canonical_rep(S("2", "1", g)) == S("1", "2", g)


def test_canonical_fixed_point():
    g = Ground(["1", "2"])
    x = S("1", "2", g)
    assert canonical_rep(x) == x


def test_positive_sets_store_empty_plus():
    # lexicographically the empty list is smallest, so ({a},{}) -> ({},{a})
    x = canonical_rep(S("ab"))
    assert x.plus == 0 and x.minus_labels == ("a", "b")


@given(signed_sets)
def test_canonical_is_one_of_the_pair_and_idempotent(x):
    c = canonical_rep(x)
    assert c in (x, -x)
    assert canonical_rep(c) == c
    assert canonical_rep(-x) == c


@given(signed_sets)
def test_canonical_rep_is_lexicographic_minimum(x):
    def key(s):
        return (sorted(G.index[e] for e in s.plus_labels), sorted(G.index[e] for e in s.minus_labels))

    assert key(canonical_rep(x)) == min(key(x), key(-x))


@given(st.integers(0, 31), st.integers(0, 31))
def test_canonical_pair_agrees_with_signed_sets(p, m):
    m &= ~p
    x = SignedSet(G, p, m)
    c = canonical_rep(x)
    assert canonical_pair(p, m) == (c.plus, c.minus)


# -- construction ---------------------------------------------------------------


def test_ground_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate"):
        Ground(["a", "b", "a"])


def test_overlapping_parts_rejected():
    with pytest.raises(ValueError):
        SignedSet(G, 0b11, 0b10)


def test_json_roundtrip():
    x = S("bd", "a")
    assert SignedSet.from_json(G, x.to_json()) == x
