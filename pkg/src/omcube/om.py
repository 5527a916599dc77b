"""Oriented matroids given by signed circuits and/or signed cocircuits.

Families are stored as frozensets of canonical ``(plus, minus)`` bitmask
pairs over the ground index space.  Whichever family is missing is derived
on first use by hyperplane enumeration, which is exponential in the size of
the ground set and meant for the desk-scale objects handled here (a couple
of dozen elements at most).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .signed import Ground, SignedSet, bits, canonical_pair, orthogonal_pairs

Pair = tuple[int, int]


class OMError(ValueError):
    pass


class NotAHyperline(OMError):
    pass


def _as_pairs(ground: Ground, family) -> frozenset[Pair]:
    out = set()
    for x in family:
        if isinstance(x, SignedSet):
            if x.ground != ground:
                raise OMError("signed set is over a different ground set")
            p, m = x.plus, x.minus
        else:
            p, m = x
        if p & m:
            raise OMError("signed set with overlapping parts")
        if (p | m) & ~ground.full:
            raise OMError("signed set has labels outside the ground set")
        if not (p | m):
            raise OMError("empty signed set in a circuit/cocircuit family")
        out.add(canonical_pair(p, m))
    return frozenset(out)


def _by_element(supports: Iterable[int], n: int) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(n)]
    for s in supports:
        for i in bits(s):
            table[i].append(s)
    return table


def _greedy_rank(by_elem: list[list[int]], mask: int) -> tuple[int, int]:
    """Rank of ``mask`` and the greedy basis found, from circuit supports."""
    basis = 0
    for e in bits(mask):
        trial = basis | (1 << e)
        if any(not (c & ~trial) for c in by_elem[e]):
            continue
        basis = trial
    return basis.bit_count(), basis


def _closure(supports: Sequence[int], mask: int) -> int:
    cl = mask
    for c in supports:
        rest = c & ~mask
        if rest and not (rest & (rest - 1)):
            cl |= rest
    return cl


def _hyperplanes(supports: Sequence[int], by_elem: list[list[int]], n: int, r: int) -> list[int]:
    """Closures of all independent (r-1)-sets, deduplicated."""
    found: list[int] = []
    if r == 0:
        return found
    target = r - 1

    def extend(start: int, current: int, size: int) -> None:
        if size == target:
            for h in found:
                if not (current & ~h):
                    return
            found.append(_closure(supports, current))
            return
        for e in range(start, n - (target - size) + 1):
            trial = current | (1 << e)
            if any(not (c & ~trial) for c in by_elem[e]):
                continue
            extend(e + 1, trial, size + 1)

    extend(0, 0, 0)
    return found


def _sign_complement(family: Iterable[Pair], comp: int) -> Pair:
    """The unique (up to negation) signing of ``comp`` orthogonal to every
    member of ``family``."""
    fam = list(family)
    elems = list(bits(comp))
    adj: dict[int, list[tuple[int, int]]] = {e: [] for e in elems}
    for p, m in fam:
        meet = (p | m) & comp
        if meet.bit_count() == 2:
            e, f = bits(meet)
            rel = 1 if ((p >> e & 1) == (p >> f & 1)) else -1
            # orthogonality forces X(e)C(e) = -X(f)C(f)
            adj[e].append((f, -rel))
            adj[f].append((e, -rel))
    sign = {elems[0]: 1}
    stack = [elems[0]]
    while stack:
        e = stack.pop()
        for f, rel in adj[e]:
            want = sign[e] * rel
            if f not in sign:
                sign[f] = want
                stack.append(f)
            elif sign[f] != want:
                raise OMError("no consistent signing of a hyperplane complement")
    if len(sign) != len(elems):
        raise OMError("hyperplane complement is not connected by circuits")
    plus = minus = 0
    for e, s in sign.items():
        if s > 0:
            plus |= 1 << e
        else:
            minus |= 1 << e
    for p, m in fam:
        if (p | m) & comp and not orthogonal_pairs(p, m, plus, minus):
            raise OMError("no consistent signing of a hyperplane complement")
    return plus, minus


def signed_dual(family: frozenset[Pair], n: int) -> frozenset[Pair]:
    """Signed cocircuits from signed circuits (or, symmetrically, circuits
    from cocircuits) on ``n`` elements."""
    supports = [p | m for p, m in family]
    by_elem = _by_element(supports, n)
    full = (1 << n) - 1
    r, _ = _greedy_rank(by_elem, full)
    out = set()
    for h in _hyperplanes(supports, by_elem, n, r):
        out.add(canonical_pair(*_sign_complement(family, full & ~h)))
    return frozenset(out)


@dataclass(frozen=True)
class Flat:
    ground: Ground
    mask: int
    rank: int

    @property
    def elements(self) -> frozenset[str]:
        return frozenset(self.ground.elements(self.mask))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ground.elements(self.mask)

    def __repr__(self) -> str:
        return f"Flat({{{','.join(self.labels)}}}, rank={self.rank})"


class OrientedMatroid:
    """Oriented matroid on an ordered ground set.

    At least one of ``circuits`` / ``cocircuits`` must be given; members may
    be :class:`SignedSet` values or raw ``(plus, minus)`` bitmask pairs and are
    reduced to canonical representatives.
    """

    def __init__(
        self,
        ground: Ground | Iterable[str],
        circuits: Iterable | None = None,
        cocircuits: Iterable | None = None,
        rank: int | None = None,
    ):
        self.ground = Ground.of(ground)
        if circuits is None and cocircuits is None:
            raise OMError("need circuits or cocircuits")
        self._circ = None if circuits is None else _as_pairs(self.ground, circuits)
        self._cocirc = None if cocircuits is None else _as_pairs(self.ground, cocircuits)
        if rank is not None and rank != self.rank:
            raise OMError(f"declared rank {rank} differs from computed rank {self.rank}")

    # -- families ---------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ground.labels

    @cached_property
    def circuit_pairs(self) -> frozenset[Pair]:
        if self._circ is None:
            self._circ = signed_dual(self._cocirc, self.n)
        return self._circ

    @cached_property
    def cocircuit_pairs(self) -> frozenset[Pair]:
        if self._cocirc is None:
            self._cocirc = signed_dual(self._circ, self.n)
        return self._cocirc

    @property
    def circuits(self) -> frozenset[SignedSet]:
        return frozenset(SignedSet(self.ground, p, m) for p, m in self.circuit_pairs)

    @property
    def cocircuits(self) -> frozenset[SignedSet]:
        return frozenset(SignedSet(self.ground, p, m) for p, m in self.cocircuit_pairs)

    def has_circuit(self, x: SignedSet | Pair) -> bool:
        p, m = (x.plus, x.minus) if isinstance(x, SignedSet) else x
        return canonical_pair(p, m) in self.circuit_pairs

    def has_cocircuit(self, x: SignedSet | Pair) -> bool:
        p, m = (x.plus, x.minus) if isinstance(x, SignedSet) else x
        return canonical_pair(p, m) in self.cocircuit_pairs

    def signed(self, pair: Pair) -> SignedSet:
        return SignedSet(self.ground, *pair)

    def sorted_circuits(self) -> list[SignedSet]:
        return sorted(self.circuits, key=SignedSet.sort_key)

    def sorted_cocircuits(self) -> list[SignedSet]:
        return sorted(self.cocircuits, key=SignedSet.sort_key)

    # -- matroid structure --------------------------------------------------
    @cached_property
    def _supports(self) -> list[int]:
        return sorted({p | m for p, m in self.circuit_pairs})

    @cached_property
    def _by_elem(self) -> list[list[int]]:
        return _by_element(self._supports, self.n)

    @cached_property
    def rank(self) -> int:
        if self._circ is None and self._cocirc is not None:
            dual = _by_element({p | m for p, m in self._cocirc}, self.n)
            return self.n - _greedy_rank(dual, self.ground.full)[0]
        return _greedy_rank(self._by_elem, self.ground.full)[0]

    def rank_of(self, mask: int) -> int:
        return _greedy_rank(self._by_elem, mask)[0]

    def closure(self, mask: int) -> int:
        return _closure(self._supports, mask)

    def is_flat(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def mask(self, labels: Iterable[str]) -> int:
        return self.ground.mask(labels)

    @cached_property
    def hyperplanes(self) -> frozenset[int]:
        full = self.ground.full
        return frozenset(full & ~(p | m) for p, m in self.cocircuit_pairs)

    @cached_property
    def hyperlines(self) -> frozenset[int]:
        target = self.rank - 2
        if target < 0:
            return frozenset()
        hs = sorted(self.hyperplanes)
        out = set()
        for a, b in combinations(hs, 2):
            meet = a & b
            if meet not in out and self.rank_of(meet) == target:
                out.add(meet)
        return frozenset(out)

    @cached_property
    def flat_masks(self) -> frozenset[int]:
        """Every flat, by closure of one-element extensions (desk scale)."""
        start = self.closure(0)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for f in frontier:
                for e in bits(self.ground.full & ~f):
                    g = self.closure(f | (1 << e))
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            frontier = nxt
        return frozenset(seen)

    def flats(self) -> list[Flat]:
        return sorted(
            (Flat(self.ground, f, self.rank_of(f)) for f in self.flat_masks),
            key=lambda fl: (fl.rank, tuple(bits(fl.mask))),
        )

    # -- derived objects ----------------------------------------------------
    def relabel(self, mapping: Mapping[str, str], order: Sequence[str] | None = None) -> "OrientedMatroid":
        """Rename elements; ``order`` optionally fixes the new ground order."""
        new_labels = [mapping.get(x, x) for x in self.labels]
        target = Ground(order if order is not None else new_labels)
        if set(target.labels) != set(new_labels):
            raise OMError("relabelling order does not list the renamed ground set")
        perm = [target.index[x] for x in new_labels]

        def move(mask: int) -> int:
            out = 0
            for i in bits(mask):
                out |= 1 << perm[i]
            return out

        def fam(pairs):
            return None if pairs is None else [(move(p), move(m)) for p, m in pairs]

        return OrientedMatroid(target, fam(self._circ), fam(self._cocirc))

    def reordered(self, order: Sequence[str]) -> "OrientedMatroid":
        return self.relabel({}, order)

    def reoriented(self, labels: Iterable[str] | int) -> "OrientedMatroid":
        a = labels if isinstance(labels, int) else self.mask(labels)

        def flip(pairs):
            if pairs is None:
                return None
            return [((p & ~a) | (m & a), (m & ~a) | (p & a)) for p, m in pairs]

        return OrientedMatroid(self.ground, flip(self._circ), flip(self._cocirc))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedMatroid):
            return NotImplemented
        return self.ground == other.ground and self.circuit_pairs == other.circuit_pairs

    def __hash__(self) -> int:
        return hash((self.ground, self.circuit_pairs))

    def __repr__(self) -> str:
        return f"OrientedMatroid(n={self.n}, rank={self.rank})"


# ---------------------------------------------------------------------------
# axioms


DIRECT_ELIMINATION_LIMIT = 500


def validate_circuit_axioms(
    family: Iterable[SignedSet | Pair],
    ground: Ground | Iterable[str],
    cocircuits: Iterable[SignedSet | Pair] | None = None,
) -> list[str]:
    """Violations of the signed circuit axioms; empty means valid.

    Families are read up to negation: each member stands for the pair
    ``{X, -X}``.  Weak elimination is tested pair by pair for families of
    at most ``DIRECT_ELIMINATION_LIMIT`` members.  Larger families need the
    claimed cocircuits: the family is then certified through the
    orthogonality characterization (cocircuit supports satisfy the
    hyperplane axioms, the circuit supports are exactly the circuits of that
    matroid, and every circuit is orthogonal to every cocircuit), which is
    equivalent and quadratic instead of cubic.
    """
    ground = Ground.of(ground)
    problems: list[str] = []
    pairs = set()
    for x in family:
        if isinstance(x, SignedSet):
            if x.ground != ground:
                raise OMError("signed set over a different ground set")
            p, m = x.plus, x.minus
        else:
            p, m = x
        if (p | m) & ~ground.full:
            raise OMError("labels outside the ground set")
        if p & m:
            problems.append("overlapping parts")
            continue
        if not (p | m):
            problems.append("empty signed set")
            continue
        pairs.add(canonical_pair(p, m))

    def show(p: int, m: int) -> str:
        return repr(SignedSet(ground, p, m))

    supports: dict[int, Pair] = {}
    for p, m in pairs:
        s = p | m
        if s in supports:
            problems.append(f"two signings on one support: {show(*supports[s])} / {show(p, m)}")
        supports[s] = (p, m)
    sups = sorted(supports)
    for a, b in combinations(sups, 2):
        if not (a & ~b) or not (b & ~a):
            small, big = (a, b) if not (a & ~b) else (b, a)
            problems.append(f"incomparability: {show(*supports[small])} inside {show(*supports[big])}")

    if len(pairs) > DIRECT_ELIMINATION_LIMIT and cocircuits is not None:
        co = {canonical_pair(*((x.plus, x.minus) if isinstance(x, SignedSet) else x)) for x in cocircuits}
        return problems + _certify_by_orthogonality(ground, pairs, co, show)

    both = list(pairs) + [(m, p) for p, m in pairs]
    for (xp, xm), (yp, ym) in combinations(both, 2):
        if (xp, xm) == (ym, yp):
            continue
        for e in bits((xp & ym) | (xm & yp)):
            bit = 1 << e
            allow_p = (xp | yp) & ~bit
            allow_m = (xm | ym) & ~bit
            if not any(not (zp & ~allow_p) and not (zm & ~allow_m) for zp, zm in both):
                problems.append(
                    f"elimination: {show(xp, xm)} and {show(yp, ym)} at {ground.labels[e]}"
                )
    return problems


def _certify_by_orthogonality(ground: Ground, pairs: set[Pair], co: set[Pair], show) -> list[str]:
    problems: list[str] = []
    full = ground.full
    co_sups = sorted({p | m for p, m in co})
    hyper = [full & ~d for d in co_sups]
    hset = set(hyper)
    if full in hset:
        problems.append("the whole ground set is a hyperplane")
    for a, b in combinations(hyper, 2):
        if not (a & ~b) or not (b & ~a):
            problems.append("hyperplanes are nested")
            continue
        meet = a & b
        for e in bits(full & ~(a | b)):
            want = meet | (1 << e)
            if not any(not (want & ~h) for h in hyper):
                problems.append("hyperplane axiom fails")
                break
    if problems:
        return problems

    def independent(sm: int) -> bool:
        traces = {d & sm for d in co_sups}
        return all((1 << e) in traces for e in bits(sm))

    rank = 0
    # rank = size of a maximal independent set, grown greedily
    acc = 0
    for e in range(len(ground)):
        if independent(acc | (1 << e)):
            acc |= 1 << e
            rank += 1
    expected = set()
    for k in range(1, rank + 2):
        for combo in combinations(range(len(ground)), k):
            sm = 0
            for e in combo:
                sm |= 1 << e
            if any(not (c & ~sm) for c in expected):
                continue
            if not independent(sm) and all(independent(sm & ~(1 << e)) for e in combo):
                expected.add(sm)
    have = {p | m for p, m in pairs}
    for sm in sorted(expected - have):
        problems.append(f"missing circuit on support {ground.elements(sm)}")
    for sm in sorted(have - expected):
        problems.append(f"support {ground.elements(sm)} is not a circuit of the cocircuit matroid")
    for cp, cm in pairs:
        for dp, dm in co:
            if not orthogonal_pairs(cp, cm, dp, dm):
                problems.append(f"orthogonality: {show(cp, cm)} against {show(dp, dm)}")
    return problems


def check_orthogonality(om: OrientedMatroid) -> list[tuple[SignedSet, SignedSet]]:
    """Circuit/cocircuit pairs that fail orthogonality (full product)."""
    bad = []
    for cp, cm in om.circuit_pairs:
        for dp, dm in om.cocircuit_pairs:
            if not orthogonal_pairs(cp, cm, dp, dm):
                bad.append((om.signed((cp, cm)), om.signed((dp, dm))))
    return bad


# ---------------------------------------------------------------------------
# rank, flats, minors


def rank(om: OrientedMatroid) -> int:
    return om.rank


def flats_of_corank(om: OrientedMatroid, c: int) -> set[Flat]:
    if c == 1:
        masks = om.hyperplanes
    elif c == 2:
        masks = om.hyperlines
    else:
        raise ValueError("corank must be 1 or 2")
    return {Flat(om.ground, f, om.rank - c) for f in masks}


def _flat_mask(om: OrientedMatroid, flat: Flat | int | Iterable[str]) -> int:
    if isinstance(flat, Flat):
        return flat.mask
    if isinstance(flat, int):
        return flat
    return om.mask(flat)


def cocircuits_through(om: OrientedMatroid, mask: int) -> list[Pair]:
    return sorted(
        ((p, m) for p, m in om.cocircuit_pairs if not ((p | m) & mask)),
        key=lambda x: (tuple(bits(x[0])), tuple(bits(x[1]))),
    )


def contract_rank2(om: OrientedMatroid, hyperline: Flat | int | Iterable[str]) -> list[SignedSet]:
    """Cocircuits of the rank-2 contraction by a hyperline, one per sign pair,
    restricted to the complement of the hyperline."""
    L = _flat_mask(om, hyperline)
    if L not in om.hyperlines:
        raise NotAHyperline("not a hyperline of this oriented matroid")
    rest = [x for x in om.labels if not (L >> om.ground.index[x] & 1)]
    return [om.signed(pair).restrict(rest) for pair in cocircuits_through(om, L)]


def _minimal(pairs: Iterable[Pair]) -> set[Pair]:
    by_support: dict[int, Pair] = {}
    for p, m in pairs:
        if p | m:
            by_support.setdefault(p | m, canonical_pair(p, m))
    sups = sorted(by_support, key=int.bit_count)
    keep: list[int] = []
    for s in sups:
        if not any(not (k & ~s) for k in keep):
            keep.append(s)
    return {by_support[s] for s in keep}


def _compress(mask: int, kept: Sequence[int]) -> int:
    out = 0
    for j, i in enumerate(kept):
        if mask >> i & 1:
            out |= 1 << j
    return out


def restriction(om: OrientedMatroid, labels: Iterable[str]) -> OrientedMatroid:
    """Deletion of everything outside ``labels``."""
    S = om.mask(labels)
    kept = [i for i in range(om.n) if S >> i & 1]
    sub = Ground(om.labels[i] for i in kept)
    circs = [
        (_compress(p, kept), _compress(m, kept))
        for p, m in om.circuit_pairs
        if not ((p | m) & ~S)
    ]
    cocircs = _minimal((p & S, m & S) for p, m in om.cocircuit_pairs)
    cocircs = [(_compress(p, kept), _compress(m, kept)) for p, m in cocircs]
    return OrientedMatroid(sub, circs, cocircs)


def deletion(om: OrientedMatroid, labels: Iterable[str]) -> OrientedMatroid:
    drop = set(labels)
    return restriction(om, [x for x in om.labels if x not in drop])


def contraction(om: OrientedMatroid, labels: Iterable[str]) -> OrientedMatroid:
    T = om.mask(labels)
    kept = [i for i in range(om.n) if not (T >> i & 1)]
    sub = Ground(om.labels[i] for i in kept)
    keep_mask = om.ground.full & ~T
    cocircs = [
        (_compress(p, kept), _compress(m, kept))
        for p, m in om.cocircuit_pairs
        if not ((p | m) & T)
    ]
    circs = _minimal((p & keep_mask, m & keep_mask) for p, m in om.circuit_pairs)
    circs = [(_compress(p, kept), _compress(m, kept)) for p, m in circs]
    return OrientedMatroid(sub, circs, cocircs)


def cocircuits_from_circuits(om: OrientedMatroid) -> frozenset[SignedSet]:
    fam = signed_dual(om.circuit_pairs, om.n)
    return frozenset(SignedSet(om.ground, p, m) for p, m in fam)


def circuits_from_cocircuits(om: OrientedMatroid) -> frozenset[SignedSet]:
    fam = signed_dual(om.cocircuit_pairs, om.n)
    return frozenset(SignedSet(om.ground, p, m) for p, m in fam)


# ---------------------------------------------------------------------------
# acyclicity and faces


def is_acyclic(om: OrientedMatroid) -> bool:
    return not any(p == 0 or m == 0 for p, m in om.circuit_pairs)


def positive_cocircuits(om: OrientedMatroid) -> set[SignedSet]:
    return {SignedSet(om.ground, p | m, 0) for p, m in om.cocircuit_pairs if p == 0 or m == 0}


@dataclass(frozen=True)
class FaceLattice:
    """Zero sets of the positive covectors, ordered by inclusion."""

    ground: Ground
    faces: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.ground.full

    @property
    def facets(self) -> tuple[int, ...]:
        proper = [f for f in self.faces if f != self.top]
        return tuple(f for f in proper if not any(f != g and not (f & ~g) for g in proper))

    @property
    def vertices(self) -> tuple[int, ...]:
        nonempty = [f for f in self.faces if f]
        return tuple(f for f in nonempty if not any(f != g and not (g & ~f) for g in nonempty))

    def labels(self, face: int) -> tuple[str, ...]:
        return self.ground.elements(face)

    def __len__(self) -> int:
        return len(self.faces)

    def is_simplex_on(self, vertex_labels: Iterable[str]) -> bool:
        """True iff this lattice is the face lattice of a simplex whose
        vertices are the given singletons (every face is determined by, and
        determines, the vertices it contains)."""
        vmask = self.ground.mask(vertex_labels)
        singles = [1 << i for i in bits(vmask)]
        if sorted(self.vertices) != sorted(singles):
            return False
        traces = {}
        for f in self.faces:
            t = f & vmask
            if t in traces:
                return False
            traces[t] = f
        if len(traces) != 1 << len(singles):
            return False
        for f in self.faces:
            for g in self.faces:
                if (not (f & ~g)) != (not ((f & vmask) & ~(g & vmask))):
                    return False
        return True


def lv_face_lattice(om: OrientedMatroid) -> FaceLattice:
    if not is_acyclic(om):
        raise OMError("face lattice requested for a cyclic oriented matroid")
    full = om.ground.full
    zeros = {full & ~(p | m) for p, m in om.cocircuit_pairs if p == 0 or m == 0}
    faces = {full}
    frontier = set(zeros)
    faces |= frontier
    while frontier:
        nxt = set()
        for f in frontier:
            for z in zeros:
                g = f & z
                if g not in faces:
                    nxt.add(g)
        faces |= nxt
        frontier = nxt
    return FaceLattice(om.ground, tuple(sorted(faces, key=lambda f: (f.bit_count(), f))))


# ---------------------------------------------------------------------------
# isomorphism


class _ParityUF:
    """Union-find over GF(2) labels with rollback."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.size = [1] * n
        self.log: list[tuple[int, int] | None] = []

    def find(self, x: int) -> tuple[int, int]:
        par = 0
        while self.parent[x] != x:
            par ^= self.parity[x]
            x = self.parent[x]
        return x, par

    def union(self, a: int, b: int, rel: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            self.log.append(None)
            return (pa ^ pb) == rel
        if self.size[ra] < self.size[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        self.size[ra] += self.size[rb]
        self.log.append((ra, rb))
        return True

    def mark(self) -> int:
        return len(self.log)

    def rollback(self, mark: int) -> None:
        while len(self.log) > mark:
            entry = self.log.pop()
            if entry is not None:
                ra, rb = entry
                self.parent[rb] = rb
                self.parity[rb] = 0
                self.size[ra] -= self.size[rb]


def _signature(om: OrientedMatroid) -> list[tuple]:
    sig = []
    circ = [p | m for p, m in om.circuit_pairs]
    cocirc = [p | m for p, m in om.cocircuit_pairs]
    for i in range(om.n):
        bit = 1 << i
        sig.append(
            (
                tuple(sorted(c.bit_count() for c in circ if c & bit)),
                tuple(sorted(d.bit_count() for d in cocirc if d & bit)),
            )
        )
    return sig


def _iso_search(om1: OrientedMatroid, om2: OrientedMatroid, reorientation: bool):
    n = om1.n
    if n != om2.n or om1.rank != om2.rank:
        return None
    c1, c2 = om1.circuit_pairs, om2.circuit_pairs
    if len(c1) != len(c2) or len(om1.cocircuit_pairs) != len(om2.cocircuit_pairs):
        return None
    sig1, sig2 = _signature(om1), _signature(om2)
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[j for j in range(n) if sig2[j] == sig1[i]] for i in range(n)]
    supports1 = sorted({p | m for p, m in c1})
    target_by_support = {p | m: (p, m) for p, m in c2}

    # element order: grow along shared circuits, rarest signature first
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        def score(i: int) -> tuple:
            shared = sum(1 for s in supports1 if s >> i & 1 and s & placed)
            return (-shared, len(candidates[i]), i)

        i = min(remaining, key=score)
        order.append(i)
        placed |= 1 << i
        remaining.discard(i)
    pos = {e: k for k, e in enumerate(order)}
    closing: list[list[Pair]] = [[] for _ in range(n)]
    for p, m in c1:
        last = max(bits(p | m), key=lambda e: pos[e])
        closing[pos[last]].append((p, m))

    image = [-1] * n
    used = [False] * n
    uf = _ParityUF(n)

    def image_pair(p: int, m: int) -> Pair:
        ip = im = 0
        for e in bits(p):
            ip |= 1 << image[e]
        for e in bits(m):
            im |= 1 << image[e]
        return ip, im

    def consistent(k: int) -> bool:
        for p, m in closing[k]:
            ip, im = image_pair(p, m)
            tgt = target_by_support.get(ip | im)
            if tgt is None:
                return False
            if not reorientation:
                if canonical_pair(ip, im) != tgt:
                    return False
                continue
            tp, _ = tgt
            # d(e) = 0 when image sign agrees with target sign on image[e]
            elems = list(bits(p | m))
            d = [((ip >> image[e] & 1) ^ (tp >> image[e] & 1)) for e in elems]
            for a in range(1, len(elems)):
                if not uf.union(elems[0], elems[a], d[0] ^ d[a]):
                    return False
        return True

    def solve(k: int) -> bool:
        if k == n:
            return True
        e = order[k]
        for j in candidates[e]:
            if used[j]:
                continue
            image[e] = j
            used[j] = True
            mark = uf.mark()
            if consistent(k) and solve(k + 1):
                return True
            uf.rollback(mark)
            used[j] = False
            image[e] = -1
        return False

    if not solve(0):
        return None
    mapping = {om1.labels[i]: om2.labels[image[i]] for i in range(n)}
    flips = frozenset()
    if reorientation:
        flips = frozenset(om1.labels[i] for i in range(n) if uf.find(i)[1])
    return mapping, flips


def isomorphism(
    om1: OrientedMatroid, om2: OrientedMatroid, reorientation: bool = False
) -> dict[str, str] | None:
    """A label bijection carrying the circuits of ``om1`` onto those of
    ``om2``; with ``reorientation`` the match is allowed after flipping signs
    on a subset of elements (see :func:`reorientation_isomorphism`)."""
    found = _iso_search(om1, om2, reorientation)
    return None if found is None else found[0]


def reorientation_isomorphism(
    om1: OrientedMatroid, om2: OrientedMatroid
) -> tuple[dict[str, str], frozenset[str]] | None:
    """``(mapping, flipped)`` such that reorienting ``om1`` on ``flipped`` and
    renaming by ``mapping`` gives ``om2``."""
    return _iso_search(om1, om2, True)


def is_isomorphic(om1: OrientedMatroid, om2: OrientedMatroid, reorientation: bool = False) -> bool:
    return _iso_search(om1, om2, reorientation) is not None
