"""Enumeration of oriented cubes and adjoints by chirotope search.

Unknowns are the chirotope values on the r-subsets of the ground set.
Required signed circuits and cocircuits tie those values together in
classes that are either all zero or carry fixed relative signs; required
hyperplanes add "all zero or all nonzero" groups.  The search branches on
class values and propagates the 3-term Grassmann-Pluecker relations.  Every
leaf is checked to be a chirotope (basis exchange plus the 3-term
relations), turned into an oriented matroid, and re-verified with the
ordinary cube / adjoint checks.
"""
from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import labels as lab
from .extensions import adjoint_signatures, is_adjoint, is_oriented_cube
from .generators import canonical_adjoint, facet_mask, real_cube, rectangles
from .om import OMError, OrientedMatroid, Pair, reorientation_isomorphism
from .realization import chirotope as config_chirotope, cube_points, lifted_adjoint_vectors
from .signed import Ground, SignedSet, bits, canonical_pair

MINUS, ZERO, PLUS = 1, 2, 4
VALUE = {MINUS: -1, ZERO: 0, PLUS: 1}
BIT = {-1: MINUS, 0: ZERO, 1: PLUS}
SINGLE = (MINUS, ZERO, PLUS)


def _flip_bits(d: int) -> int:
    return ((d & MINUS) << 2) | (d & ZERO) | ((d & PLUS) >> 2)


def _parity_between(seq_a: Iterable[int], seq_b: Iterable[int]) -> int:
    """Sign of the permutation sorting the concatenation a + b, where a and b
    are each increasing."""
    inv = 0
    bs = list(seq_b)
    for x in seq_a:
        inv += sum(1 for y in bs if y < x)
    return -1 if inv & 1 else 1


def _sort_sign(seq: Sequence[int]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# problem set-up


class _UF:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.par = {x: 1 for x in items}

    def find(self, x):
        p = 1
        path = []
        while self.parent[x] != x:
            path.append(x)
            p *= self.par[x]
            x = self.parent[x]
        root = x
        # path compression keeps the parities consistent
        acc = p
        for y in path:
            old = self.par[y]
            self.parent[y] = root
            self.par[y] = acc
            acc *= old
        return root, p

    def union(self, a, b, rel) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return pa * pb == rel
        self.parent[rb] = ra
        self.par[rb] = pa * pb * rel
        return True


@dataclass
class Requirements:
    ground: Ground
    rank: int
    circuits: list[Pair] = field(default_factory=list)
    cocircuits: list[Pair] = field(default_factory=list)
    hyperplanes: list[int] = field(default_factory=list)


class ChirotopeProblem:
    """Static structure: variable classes, groups and GP relations."""

    def __init__(self, req: Requirements, fixed: dict[int, int] | None = None):
        self.req = req
        n, r = len(req.ground), req.rank
        self.n, self.r = n, r
        self.sets = [_mask(c) for c in combinations(range(n), r)]
        self.index = {m: k for k, m in enumerate(self.sets)}
        uf = _UF(range(len(self.sets)))
        zero_forced: set[int] = set()
        bad_roots: set[int] = set()
        zero_links: list[list[int]] = []
        atleast: list[list[int]] = []
        full = (1 << n) - 1

        for p, m in req.circuits:
            s = p | m
            elems = list(bits(s))
            k = len(elems) - 1
            for t in self.sets:
                if not (s & ~t):
                    zero_forced.add(self.index[t])
            if r - k < 0:
                continue
            for b in combinations(list(bits(full & ~s)), r - k):
                members = []
                for i, c in enumerate(elems):
                    rest = [x for x in elems if x != c]
                    sign_c = 1 if p >> c & 1 else -1
                    par = (-1) ** i * sign_c * _parity_between(rest, b)
                    members.append((self.index[_mask(rest) | _mask(b)], par))
                v0, p0 = members[0]
                for v, pv in members[1:]:
                    if not uf.union(v0, v, p0 * pv):
                        bad_roots.add(v0)

        def hyperplane_groups(h: int, signed: Pair | None):
            for t in self.sets:
                if (t & h).bit_count() >= r:
                    zero_forced.add(self.index[t])
            groups = []
            for ind in combinations(list(bits(h)), r - 1):
                im = _mask(ind)
                members = []
                for e in bits(full & ~h):
                    above = sum(1 for x in ind if x > e)
                    par = -1 if above & 1 else 1
                    if signed is not None:
                        par *= 1 if signed[0] >> e & 1 else -1
                    members.append((self.index[im | (1 << e)], par))
                groups.append(members)
            return groups

        for p, m in req.cocircuits:
            h = full & ~(p | m)
            groups = hyperplane_groups(h, (p, m))
            for members in groups:
                v0, p0 = members[0]
                for v, pv in members[1:]:
                    if not uf.union(v0, v, p0 * pv):
                        bad_roots.add(v0)
            atleast.append([g[0][0] for g in groups])
        for h in req.hyperplanes:
            groups = hyperplane_groups(h, None)
            for members in groups:
                zero_links.append([v for v, _ in members])
            atleast.append([g[0][0] for g in groups])

        # classes
        roots = {}
        self.var_class: list[tuple[int, int]] = []
        for v in range(len(self.sets)):
            root, par = uf.find(v)
            if root not in roots:
                roots[root] = len(roots)
            self.var_class.append((roots[root], par))
        k = len(roots)
        self.n_classes = k
        self.members: list[list[int]] = [[] for _ in range(k)]
        for v, (c, _) in enumerate(self.var_class):
            self.members[c].append(v)
        self.init_domain = [MINUS | ZERO | PLUS] * k
        for v in zero_forced:
            self.init_domain[self.var_class[v][0]] = ZERO
        for root in bad_roots:
            self.init_domain[self.var_class[root][0]] = ZERO
        for v, val in (fixed or {}).items():
            c, par = self.var_class[v]
            want = BIT[val * par]
            self.init_domain[c] &= want

        def cls_list(vs):
            return sorted({self.var_class[v][0] for v in vs})

        self.zero_groups = [g for g in (cls_list(z) for z in zero_links) if len(g) > 1]
        self.atleast = [cls_list(a) for a in atleast]

        # 3-term Grassmann-Pluecker relations
        self.gp: list[tuple] = []
        for s in combinations(range(n), r - 2):
            sm = _mask(s)
            rest = [x for x in range(n) if not sm >> x & 1]
            for a, b, c, d in combinations(rest, 4):
                terms = []
                for (x, y), (z, w), sgn in (((a, b), (c, d), 1), ((a, c), (b, d), -1), ((a, d), (b, c), 1)):
                    f1 = self._ordered(list(s) + [x, y])
                    f2 = self._ordered(list(s) + [z, w])
                    terms.append((f1[0], f2[0], sgn * f1[1] * f2[1]))
                self.gp.append(tuple(terms))
        self.watch: list[list[int]] = [[] for _ in range(k)]
        self.zwatch: list[list[int]] = [[] for _ in range(k)]
        self.awatch: list[list[int]] = [[] for _ in range(k)]
        for gi, rel in enumerate(self.gp):
            for c in {t[0] for t in rel} | {t[1] for t in rel}:
                self.watch[c].append(gi)
        for zi, g in enumerate(self.zero_groups):
            for c in g:
                self.zwatch[c].append(zi)
        for ai, g in enumerate(self.atleast):
            for c in g:
                self.awatch[c].append(ai)

    def _ordered(self, seq: Sequence[int]) -> tuple[int, int]:
        """(class, sign) of the chirotope on an ordered tuple.  The sign
        folds the sorting permutation and the class parity."""
        v = self.index[_mask(seq)]
        c, par = self.var_class[v]
        return c, par * _sort_sign(seq)

    def chirotope_of(self, dom: Sequence[int]) -> list[int]:
        return [par * VALUE[dom[c]] for c, par in self.var_class]


class _Solver:
    """Domains with a trail; constraint propagation."""

    def __init__(self, prob: ChirotopeProblem):
        self.p = prob
        self.dom = list(prob.init_domain)
        self.trail: list[tuple[int, int]] = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            c, d = self.trail.pop()
            self.dom[c] = d

    def restrict(self, c: int, d: int, queue: list[int]) -> bool:
        new = self.dom[c] & d
        if new == self.dom[c]:
            return True
        if not new:
            return False
        self.trail.append((c, self.dom[c]))
        self.dom[c] = new
        queue.append(c)
        return True

    def propagate(self, queue: list[int]) -> bool:
        p = self.p
        dom = self.dom
        while queue:
            c = queue.pop()
            for zi in p.zwatch[c]:
                g = p.zero_groups[zi]
                if dom[c] == ZERO:
                    for o in g:
                        if not self.restrict(o, ZERO, queue):
                            return False
                elif not dom[c] & ZERO:
                    for o in g:
                        if not self.restrict(o, MINUS | PLUS, queue):
                            return False
            for ai in p.awatch[c]:
                g = p.atleast[ai]
                open_ = [o for o in g if dom[o] != ZERO]
                if not open_:
                    return False
                if len(open_) == 1 and not self.restrict(open_[0], MINUS | PLUS, queue):
                    return False
            for gi in p.watch[c]:
                if not self._gp(p.gp[gi], queue):
                    return False
        return True

    def _gp(self, rel, queue) -> bool:
        dom = self.dom
        free = []
        for t in rel:
            for c in (t[0], t[1]):
                if dom[c] not in SINGLE and c not in free:
                    free.append(c)
        if len(free) > 3:
            return True
        options = [[v for v in SINGLE if dom[c] & v] for c in free]
        supported = [0] * len(free)
        any_ok = False

        def value(c, assign):
            if c in assign:
                return VALUE[assign[c]]
            return VALUE[dom[c]]

        def rec(k, assign):
            nonlocal any_ok
            if k == len(free):
                signs = {value(a, assign) * value(b, assign) * s for a, b, s in rel}
                if signs == {0} or (1 in signs and -1 in signs):
                    any_ok = True
                    for j, c in enumerate(free):
                        supported[j] |= assign[c]
                return
            for v in options[k]:
                assign[free[k]] = v
                rec(k + 1, assign)
            del assign[free[k]]

        rec(0, {})
        if not any_ok:
            return False
        for j, c in enumerate(free):
            if not self.restrict(c, supported[j], queue):
                return False
        return True


# ---------------------------------------------------------------------------
# leaves: chirotope -> oriented matroid


def is_basis_family(sets: Sequence[int], chi: Sequence[int]) -> bool:
    bases = {m for m, v in zip(sets, chi) if v}
    if not bases:
        return False
    for b1 in bases:
        for b2 in bases:
            for e in bits(b1 & ~b2):
                if not any(((b1 & ~(1 << e)) | (1 << f)) in bases for f in bits(b2 & ~b1)):
                    return False
    return True


def gp_holds(prob: ChirotopeProblem, dom: Sequence[int]) -> bool:
    for rel in prob.gp:
        signs = {VALUE[dom[a]] * VALUE[dom[b]] * s for a, b, s in rel}
        if signs != {0} and not (1 in signs and -1 in signs):
            return False
    return True


def om_from_chirotope(ground: Ground, rank: int, chi: dict[int, int]) -> OrientedMatroid:
    """Cocircuits ``D(e) = chi(I, e)`` over independent (r-1)-sets I."""
    n = len(ground)
    full = (1 << n) - 1
    seen: dict[int, Pair] = {}
    for ind in combinations(range(n), rank - 1):
        im = _mask(ind)
        plus = minus = 0
        for e in bits(full & ~im):
            v = chi[im | (1 << e)]
            if not v:
                continue
            if sum(1 for x in ind if x > e) & 1:
                v = -v
            if v > 0:
                plus |= 1 << e
            else:
                minus |= 1 << e
        if not (plus | minus):
            continue
        zero = full & ~(plus | minus)
        if zero not in seen:
            seen[zero] = canonical_pair(plus, minus)
        elif canonical_pair(plus, minus) != seen[zero]:
            raise OMError("inconsistent cocircuit signs from the chirotope")
    return OrientedMatroid(ground, cocircuits=seen.values())


def chirotope_of_om(om: OrientedMatroid) -> dict[int, int] | None:
    """A chirotope for ``om`` (up to global sign), read off the cocircuits
    by extending an independent (r-1)-set one element at a time."""
    r = om.rank
    n = om.n
    full = om.ground.full
    cocirc = {full & ~(p | m): (p, m) for p, m in om.cocircuit_pairs}
    sets = [_mask(c) for c in combinations(range(n), r)]
    bases = [s for s in sets if om.rank_of(s) == r]
    if not bases:
        return None
    chi = {s: 0 for s in sets}
    ref = bases[0]
    chi[ref] = 1
    # breadth-first over basis exchange: chi(B - b + e) from the cocircuit
    # complementary to cl(B - b)
    frontier = [ref]
    while frontier:
        nxt = []
        for b in frontier:
            for x in bits(b):
                ind = b & ~(1 << x)
                h = om.closure(ind)
                p, m = cocirc[h]
                for e in bits(full & ~h):
                    nb = ind | (1 << e)
                    if chi[nb]:
                        continue
                    # chi(I, e) / chi(I, x) = D(e) / D(x)
                    dx = 1 if p >> x & 1 else -1
                    de = 1 if p >> e & 1 else -1
                    ox = -1 if sum(1 for y in bits(ind) if y > x) & 1 else 1
                    oe = -1 if sum(1 for y in bits(ind) if y > e) & 1 else 1
                    chi[nb] = chi[b] * ox * dx * de * oe
                    nxt.append(nb)
        frontier = nxt
    return chi


# ---------------------------------------------------------------------------
# symmetry


def hyperoctahedral(n: int) -> list[tuple[tuple[int, ...], int]]:
    """(coordinate permutation, flip mask) pairs."""
    return [(perm, f) for perm in permutations(range(n)) for f in range(1 << n)]


def _move_vertex(a: int, perm: Sequence[int], flips: int) -> int:
    a ^= flips
    out = 0
    for k in range(len(perm)):
        if a >> k & 1:
            out |= 1 << perm[k]
    return out


def cube_group_actions(n: int) -> list[tuple[list[int], int]]:
    """Ground permutations (over cube_labels order) with reorientation masks."""
    out = []
    for perm, f in hyperoctahedral(n):
        out.append(([_move_vertex(a, perm, f) for a in range(1 << n)], 0))
    return out


def adjoint_group_actions(n: int) -> list[tuple[list[int], int]]:
    """Actions on the adjoint ground (y's first, then vertices); flipping a
    coordinate also reorients the matching y."""
    out = []
    for perm, f in hyperoctahedral(n):
        images = [perm[i] for i in range(n)] + [n + _move_vertex(a, perm, f) for a in range(1 << n)]
        out.append((images, f))
    return out


def canonical_form(sets: Sequence[int], chi: Sequence[int], actions) -> tuple[int, ...]:
    index = {m: k for k, m in enumerate(sets)}
    best = None
    for images, reorient in actions:
        out = [0] * len(sets)
        for m, v in zip(sets, chi):
            if not v:
                continue
            elems = list(bits(m))
            moved = [images[e] for e in elems]
            s = v * _sort_sign(moved)
            if (m & reorient).bit_count() & 1:
                s = -s
            out[index[_mask(moved)]] = s
        first = next(x for x in out if x)
        if first < 0:
            out = [-x for x in out]
        t = tuple(out)
        if best is None or t < best:
            best = t
    return best


def chi_string(chi: Sequence[int]) -> str:
    return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in chi)


def digest(ground: Ground, chi: Sequence[int]) -> str:
    h = hashlib.sha256()
    h.update(json.dumps(list(ground.labels)).encode())
    h.update(chi_string(chi).encode())
    return h.hexdigest()[:16]


# ---------------------------------------------------------------------------
# search driver


@dataclass
class SearchReport:
    n: int
    strategy: str
    candidates_examined: int
    cubes_found: list[str]
    isomorphism_classes: int
    wall_time: float
    completeness_flag: str
    kind: str = "cubes"
    nodes: int = 0
    rejected_leaves: int = 0
    classes_strong: int | None = None
    class_representatives: list[str] = field(default_factory=list)
    threads: int = 1
    notes: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.completeness_flag == "proved-exhaustive"

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class _Outcome:
    chis: dict[str, list[int]]
    leaves: int
    nodes: int
    rejected: int
    complete: bool
    path: list


def _value_order(strategy: str, seed_val: int | None) -> list[int]:
    base = [PLUS, MINUS, ZERO]
    if strategy == "pruned" and seed_val is not None:
        first = BIT[seed_val]
        return [first] + [v for v in base if v != first]
    return base


def _dfs(
    prob: ChirotopeProblem,
    accept: Callable[[list[int]], bool],
    strategy: str,
    deadline: float,
    seed: list[int] | None,
    sign_rule: bool,
    resume_path: list | None = None,
    checkpoint: Callable[..., None] | None = None,
    checkpoint_every: float = 30.0,
    root_choice: int | None = None,
) -> _Outcome:
    solver = _Solver(prob)
    found: dict[str, list[int]] = {}
    leaves = nodes = rejected = 0
    if not solver.propagate(list(range(prob.n_classes))):
        return _Outcome(found, 0, 1, 0, True, [])
    seed_class = None
    if seed is not None:
        seed_class = [0] * prob.n_classes
        for v, (c, par) in enumerate(prob.var_class):
            seed_class[c] = seed[v] * par

    def pick() -> int | None:
        for c in range(prob.n_classes):
            if solver.dom[c] not in SINGLE:
                return c
        return None

    def open_frame(c: int) -> list:
        vals = [v for v in _value_order(strategy, seed_class[c] if seed_class else None) if solver.dom[c] & v]
        if sign_rule and not any(d in (MINUS, PLUS) for d in solver.dom):
            # a global sign change maps solutions to solutions
            vals = [v for v in vals if v != MINUS]
        return [c, vals, solver.mark(), None]

    def advance() -> bool:
        """Apply the next value of the top frame; pop exhausted frames."""
        while stack:
            frame = stack[-1]
            c, vals, mark, _ = frame
            solver.undo(mark)
            while vals:
                v = vals.pop(0)
                q: list[int] = []
                if solver.restrict(c, v, q) and solver.propagate(q):
                    frame[3] = v
                    return True
                solver.undo(mark)
            stack.pop()
        return False

    def path() -> list:
        return [[f[0], list(f[1]), f[3]] for f in stack]

    stack: list[list] = []
    if resume_path:
        for c, remaining, chosen in resume_path:
            mark = solver.mark()
            q: list[int] = []
            if not (solver.restrict(c, chosen, q) and solver.propagate(q)):
                raise ValueError("checkpoint does not replay on this problem")
            stack.append([c, list(remaining), mark, chosen])
    elif root_choice is not None:
        c = pick()
        if c is None:
            if root_choice != PLUS:
                return _Outcome(found, 0, 0, 0, True, [])
        else:
            frame = open_frame(c)
            frame[1] = [v for v in frame[1] if v == root_choice]
            stack.append(frame)
            if not advance():
                return _Outcome(found, 0, 1, 0, True, [])

    last_save = time.monotonic()
    while True:
        now = time.monotonic()
        if now > deadline:
            return _Outcome(found, leaves, nodes, rejected, False, path())
        if checkpoint and now - last_save > checkpoint_every:
            checkpoint(path(), found, leaves, nodes, rejected)
            last_save = now
        nodes += 1
        c = pick()
        if c is None:
            leaves += 1
            chi = prob.chirotope_of(solver.dom)
            if accept(chi):
                found[chi_string(chi)] = chi
            else:
                rejected += 1
        else:
            stack.append(open_frame(c))
        if not advance():
            break
    return _Outcome(found, leaves, nodes, rejected, True, [])


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("OMCUBE_THREADS", "1")))
    except ValueError:
        return 1


# problem specifications -----------------------------------------------------


def cube_requirements(n: int) -> Requirements:
    g = Ground(lab.cube_labels(n))
    circuits = [(r.plus, r.minus) for r in sorted(rectangles(n), key=SignedSet.sort_key)]
    hyperplanes = [facet_mask(n, i, s) for i in range(1, n + 1) for s in (True, False)]
    return Requirements(g, n + 1, circuits=circuits, hyperplanes=hyperplanes)


def adjoint_requirements(n: int) -> Requirements:
    g = Ground(lab.adjoint_labels(n))
    cocircuits = [(x.plus, x.minus) for _, x in adjoint_signatures(n)]
    return Requirements(g, n + 1, cocircuits=cocircuits)


def _seed_chirotope(kind: str, n: int, prob: ChirotopeProblem) -> list[int]:
    config = cube_points(n) if kind == "cubes" else lifted_adjoint_vectors(n)
    chi = config_chirotope(config)
    idx = {lab_: i for i, lab_ in enumerate(prob.req.ground.labels)}
    out = []
    for m in prob.sets:
        key = tuple(prob.req.ground.labels[i] for i in bits(m))
        out.append(chi[key])
    return out


def _acceptor(kind: str, n: int, prob: ChirotopeProblem) -> Callable[[list[int]], bool]:
    def accept(chi: list[int]) -> bool:
        if not is_basis_family(prob.sets, chi):
            return False
        dom = [0] * prob.n_classes
        for (c, par), v in zip(prob.var_class, chi):
            dom[c] = BIT[v * par]
        if not gp_holds(prob, dom):
            return False
        try:
            om = om_from_chirotope(prob.req.ground, prob.r, dict(zip(prob.sets, chi)))
            _ = om.circuit_pairs
        except OMError:
            return False
        if kind == "cubes":
            return bool(is_oriented_cube(om))
        return bool(is_adjoint(om, n, "weak"))

    return accept


def _subtree_worker(args):
    kind, n, strategy, budget, choice = args
    prob = _problem(kind, n)
    seed = _seed_chirotope(kind, n, prob)
    out = _dfs(prob, _acceptor(kind, n, prob), strategy, time.monotonic() + budget, seed, True, root_choice=choice)
    return out


_PROBLEMS: dict[tuple[str, int], ChirotopeProblem] = {}


def _problem(kind: str, n: int) -> ChirotopeProblem:
    key = (kind, n)
    if key not in _PROBLEMS:
        req = cube_requirements(n) if kind == "cubes" else adjoint_requirements(n)
        _PROBLEMS[key] = ChirotopeProblem(req)
    return _PROBLEMS[key]


def _classes(kind: str, n: int, prob: ChirotopeProblem, chis: Iterable[list[int]]):
    actions = cube_group_actions(n) if kind == "cubes" else adjoint_group_actions(n)
    forms = {}
    for chi in chis:
        form = canonical_form(prob.sets, chi, actions)
        forms.setdefault(form, chi)
    reps: list[OrientedMatroid] = []
    for form in sorted(forms):
        om = om_from_chirotope(prob.req.ground, prob.r, dict(zip(prob.sets, form)))
        if not any(reorientation_isomorphism(om, other) is not None for other in reps):
            reps.append(om)
    return reps


def _run(
    kind: str,
    n: int,
    strategy: str,
    budget: float,
    checkpoint: str | Path | None,
    checkpoint_every: float,
) -> tuple[SearchReport, list[OrientedMatroid]]:
    if strategy not in ("exhaustive", "pruned"):
        raise ValueError("strategy is 'exhaustive' or 'pruned'")
    if strategy == "exhaustive" and n not in (2, 3):
        raise ValueError("exhaustive search is limited to n in {2, 3}")
    start = time.monotonic()
    prob = _problem(kind, n)
    seed = _seed_chirotope(kind, n, prob) if strategy == "pruned" else None
    accept = _acceptor(kind, n, prob)
    threads = _threads()
    ck_path = Path(checkpoint) if checkpoint else None
    resume = None
    prior: dict[str, list[int]] = {}
    counters = [0, 0, 0]
    if ck_path and ck_path.exists():
        state = json.loads(ck_path.read_text())
        if (state["kind"], state["n"], state["strategy"]) != (kind, n, strategy):
            raise ValueError("checkpoint belongs to a different search")
        resume = state["path"]
        prior = {k: v for k, v in state["found"].items()}
        counters = [state["leaves"], state["nodes"], state["rejected"]]
        if state.get("complete"):
            resume = None

    def save(path, found, leaves, nodes, rejected, complete=False):
        if not ck_path:
            return
        data = {
            "kind": kind,
            "n": n,
            "strategy": strategy,
            "path": path,
            "found": {**prior, **found},
            "leaves": counters[0] + leaves,
            "nodes": counters[1] + nodes,
            "rejected": counters[2] + rejected,
            "complete": complete,
        }
        tmp = ck_path.with_suffix(ck_path.suffix + ".tmp")
        tmp.write_text(json.dumps(data))
        tmp.replace(ck_path)

    notes = []
    if ck_path and ck_path.exists() and resume is None and json.loads(ck_path.read_text()).get("complete"):
        outcome = _Outcome({}, 0, 0, 0, True, [])
        notes.append("restored a completed search from the checkpoint")
    elif threads > 1 and resume is None:
        choices = [PLUS, MINUS, ZERO]
        with ProcessPoolExecutor(max_workers=min(threads, len(choices))) as pool:
            parts = list(pool.map(_subtree_worker, [(kind, n, strategy, budget, c) for c in choices]))
        found: dict[str, list[int]] = {}
        for part in parts:
            found.update(part.chis)
        outcome = _Outcome(
            found,
            sum(p.leaves for p in parts),
            sum(p.nodes for p in parts),
            sum(p.rejected for p in parts),
            all(p.complete for p in parts),
            [],
        )
        notes.append("root branches split across worker processes; checkpointing disabled")
    else:
        outcome = _dfs(
            prob,
            accept,
            strategy,
            time.monotonic() + budget,
            seed,
            True,
            resume_path=resume,
            checkpoint=lambda *a: save(*a),
            checkpoint_every=checkpoint_every,
        )
        save(outcome.path, outcome.chis, outcome.leaves, outcome.nodes, outcome.rejected, outcome.complete)
    found = {**prior, **outcome.chis}
    reps = _classes(kind, n, prob, found.values())
    digests = sorted(digest(prob.req.ground, chi) for chi in found.values())
    strong = None
    if kind == "adjoints":
        strong = sum(1 for om in reps if is_adjoint(om, n, "strong"))
    report = SearchReport(
        n=n,
        strategy=strategy,
        candidates_examined=counters[0] + outcome.leaves,
        cubes_found=digests,
        isomorphism_classes=len(reps),
        wall_time=round(time.monotonic() - start, 3),
        completeness_flag="proved-exhaustive" if outcome.complete else "budget-truncated",
        kind=kind,
        nodes=counters[1] + outcome.nodes,
        rejected_leaves=counters[2] + outcome.rejected,
        classes_strong=strong,
        class_representatives=[digest(prob.req.ground, _chi_list(prob, om)) for om in reps],
        threads=threads,
        notes=notes,
    )
    return report, reps


def _chi_list(prob: ChirotopeProblem, om: OrientedMatroid) -> list[int]:
    chi = chirotope_of_om(om)
    vals = [chi[m] for m in prob.sets]
    first = next(v for v in vals if v)
    return [v * first for v in vals]


def search_cubes(
    n: int,
    strategy: str = "exhaustive",
    budget: float = 60.0,
    checkpoint: str | Path | None = None,
    checkpoint_every: float = 30.0,
) -> SearchReport:
    return _run("cubes", n, strategy, budget, checkpoint, checkpoint_every)[0]


def search_adjoints(
    n: int,
    strategy: str = "exhaustive",
    budget: float = 60.0,
    checkpoint: str | Path | None = None,
    checkpoint_every: float = 30.0,
) -> SearchReport:
    return _run("adjoints", n, strategy, budget, checkpoint, checkpoint_every)[0]


def search_with_classes(kind: str, n: int, strategy: str = "exhaustive", budget: float = 60.0):
    """Report plus one oriented matroid per class."""
    return _run(kind, n, strategy, budget, None, 30.0)


# ---------------------------------------------------------------------------
# orientations of the underlying matroid of Q_n


def _gf2_independent_rows(rows: list[int]) -> list[int]:
    """Indices of a maximal GF(2)-independent subset of the bit rows."""
    basis: dict[int, int] = {}
    picked = []
    for k, row in enumerate(rows):
        x = row
        while x:
            top = x.bit_length() - 1
            if top in basis:
                x ^= basis[top]
            else:
                basis[top] = x
                picked.append(k)
                break
    return picked


@dataclass
class OrientationReport:
    n: int
    bases: int
    gauge_fixed: int
    orientations_found: int
    reorientation_classes: int
    isomorphism_classes: int
    wall_time: float
    completeness_flag: str
    candidates_examined: int

    def to_json(self) -> dict:
        return asdict(self)


def orientation_problem(ground: Ground, rank: int, bases: Iterable[int]) -> ChirotopeProblem:
    """Chirotope problem for one matroid, gauge-fixed: values are forced to
    0 off the bases and to + on bases whose incidence rows (with a constant
    column) are independent over GF(2)."""
    sets = [_mask(c) for c in combinations(range(len(ground)), rank)]
    bases = sorted(set(bases))
    base_set = set(bases)
    rows = [m | (1 << len(ground)) for m in bases]
    gauge = [bases[k] for k in _gf2_independent_rows(rows)]
    index = {m: k for k, m in enumerate(sets)}
    fixed = {index[m]: 0 for m in sets if m not in base_set}
    fixed.update({index[m]: 1 for m in gauge})
    prob = ChirotopeProblem(Requirements(ground, rank), fixed)
    for m in bases:
        c, _ = prob.var_class[index[m]]
        prob.init_domain[c] &= MINUS | PLUS
    return prob


def orientation_classes(
    ground: Ground, rank: int, bases: Iterable[int], budget: float = 60.0
) -> tuple[list[OrientedMatroid], bool, int]:
    """All orientations of the matroid with the given bases, one per
    reorientation class, plus a completeness flag and the leaf count.

    With the gauge fixing of :func:`orientation_problem`, every completed
    leaf is a distinct reorientation class.
    """
    start = time.monotonic()
    prob = orientation_problem(ground, rank, bases)
    sets = prob.sets

    def accept(chi):
        dom = [0] * prob.n_classes
        for (c, par), v in zip(prob.var_class, chi):
            dom[c] = BIT[v * par]
        if not gp_holds(prob, dom):
            return False
        try:
            _ = om_from_chirotope(ground, rank, dict(zip(sets, chi))).circuit_pairs
        except OMError:
            return False
        return True

    out = _dfs(prob, accept, "exhaustive", start + budget, None, False)
    oms = [om_from_chirotope(ground, rank, dict(zip(sets, chi))) for _, chi in sorted(out.chis.items())]
    return oms, out.complete, out.leaves


def search_orientations(n: int, budget: float = 60.0) -> OrientationReport:
    """Orientations of the underlying matroid of Q_n up to reorientation,
    then up to relabelling as well."""
    start = time.monotonic()
    cube = real_cube(n)
    r = n + 1
    sets = [_mask(c) for c in combinations(range(cube.n), r)]
    bases = [m for m in sets if cube.rank_of(m) == r]
    oms, complete, leaves = orientation_classes(cube.ground, r, bases, budget)
    reps: list[OrientedMatroid] = []
    for om in oms:
        if not any(reorientation_isomorphism(om, o) is not None for o in reps):
            reps.append(om)
    rows = [m | (1 << cube.n) for m in bases]
    return OrientationReport(
        n=n,
        bases=len(bases),
        gauge_fixed=len(_gf2_independent_rows(rows)),
        orientations_found=len(oms),
        reorientation_classes=len(oms),
        isomorphism_classes=len(reps),
        wall_time=round(time.monotonic() - start, 3),
        completeness_flag="proved-exhaustive" if complete else "budget-truncated",
        candidates_examined=leaves,
    )
