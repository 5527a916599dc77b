"""Signed sets over ordered, labeled ground sets.

A signed set ``X = (X+, X-)`` is stored as two disjoint bitmasks over the
index space of its ground set.  Index order is the order in which labels
were given, and every set-valued output is listed in that order.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GroundMismatch(ValueError):
    pass


class Ground:
    """An ordered tuple of distinct element labels."""

    __slots__ = ("labels", "index", "_hash")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            seen: set[str] = set()
            dup = next(x for x in labels if x in seen or seen.add(x))
            raise ValueError(f"duplicate label {dup!r} in ground set")
        self.labels = labels
        self.index = index
        self._hash = hash(labels)

    @classmethod
    def of(cls, ground: "Ground | Iterable[str]") -> "Ground":
        return ground if isinstance(ground, Ground) else cls(ground)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, Ground) and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Ground({list(self.labels)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask(self, elements: Iterable[str]) -> int:
        m = 0
        for e in elements:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise KeyError(f"label {e!r} is not in the ground set") from None
        return m

    def elements(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_pair(plus: int, minus: int) -> tuple[int, int]:
    """Bitmask form of :func:`canonical_rep`.

    Comparing sorted index lists lexicographically reduces to: an empty
    positive part wins, otherwise the side holding the lowest support index.
    """
    if not plus or not minus:
        return 0, plus | minus
    if (plus & -plus) < (minus & -minus):
        return plus, minus
    return minus, plus


def orthogonal_pairs(xp: int, xm: int, yp: int, ym: int) -> bool:
    same = (xp & yp) | (xm & ym)
    diff = (xp & ym) | (xm & yp)
    return (same == 0) == (diff == 0)


class SignedSet:
    """Immutable signed subset of a ground set."""

    __slots__ = ("ground", "plus", "minus")

    def __init__(self, ground: Ground | Iterable[str], plus: int = 0, minus: int = 0):
        ground = Ground.of(ground)
        if plus & minus:
            raise ValueError("positive and negative parts must be disjoint")
        if (plus | minus) & ~ground.full:
            raise ValueError("signed set has elements outside its ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def __setattr__(self, name, value):
        raise AttributeError("SignedSet is immutable")

    @classmethod
    def from_labels(
        cls,
        ground: Ground | Iterable[str],
        plus: Iterable[str] = (),
        minus: Iterable[str] = (),
    ) -> "SignedSet":
        ground = Ground.of(ground)
        return cls(ground, ground.mask(plus), ground.mask(minus))

    @classmethod
    def from_vector(cls, ground: Ground | Iterable[str], signs: Sequence[int]) -> "SignedSet":
        ground = Ground.of(ground)
        if len(signs) != len(ground):
            raise ValueError("sign vector length differs from ground size")
        plus = minus = 0
        for i, s in enumerate(signs):
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(ground, plus, minus)

    # -- views -----------------------------------------------------------
    @property
    def support(self) -> int:
        return self.plus | self.minus

    @property
    def zero(self) -> int:
        return self.ground.full & ~(self.plus | self.minus)

    @property
    def plus_labels(self) -> tuple[str, ...]:
        return self.ground.elements(self.plus)

    @property
    def minus_labels(self) -> tuple[str, ...]:
        return self.ground.elements(self.minus)

    @property
    def support_labels(self) -> tuple[str, ...]:
        return self.ground.elements(self.support)

    @property
    def zero_labels(self) -> tuple[str, ...]:
        return self.ground.elements(self.zero)

    def sign(self, label: str) -> int:
        bit = 1 << self.ground.index[label]
        return 1 if self.plus & bit else -1 if self.minus & bit else 0

    __call__ = sign

    def vector(self) -> tuple[int, ...]:
        return tuple(
            1 if self.plus >> i & 1 else -1 if self.minus >> i & 1 else 0
            for i in range(len(self.ground))
        )

    def is_zero(self) -> bool:
        return not (self.plus | self.minus)

    # -- algebra ---------------------------------------------------------
    def __neg__(self) -> "SignedSet":
        return SignedSet(self.ground, self.minus, self.plus)

    def _check(self, other: "SignedSet") -> None:
        if self.ground is not other.ground and self.ground != other.ground:
            raise GroundMismatch("signed sets live on different ground sets")

    def compose(self, other: "SignedSet") -> "SignedSet":
        self._check(other)
        free = ~(self.plus | self.minus)
        return SignedSet(self.ground, self.plus | (other.plus & free), self.minus | (other.minus & free))

    def orthogonal(self, other: "SignedSet") -> bool:
        self._check(other)
        return orthogonal_pairs(self.plus, self.minus, other.plus, other.minus)

    def reorient(self, elements: Iterable[str] | int) -> "SignedSet":
        a = elements if isinstance(elements, int) else self.ground.mask(elements)
        keep = ~a
        return SignedSet(
            self.ground,
            (self.plus & keep) | (self.minus & a),
            (self.minus & keep) | (self.plus & a),
        )

    def restrict(self, elements: Iterable[str]) -> "SignedSet":
        """Restriction to ``elements``, which become the new ground set (kept
        in the order of the old one)."""
        wanted = set(elements)
        missing = wanted - set(self.ground.labels)
        if missing:
            raise KeyError(f"labels not in ground set: {sorted(missing)}")
        sub = Ground(x for x in self.ground.labels if x in wanted)
        return SignedSet.from_labels(
            sub,
            (x for x in self.plus_labels if x in wanted),
            (x for x in self.minus_labels if x in wanted),
        )

    def canonical(self) -> "SignedSet":
        p, m = canonical_pair(self.plus, self.minus)
        return self if (p, m) == (self.plus, self.minus) else SignedSet(self.ground, p, m)

    # -- protocol --------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedSet):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus and self.ground == other.ground

    def __hash__(self) -> int:
        return hash((self.ground, self.plus, self.minus))

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(bits(self.plus)), tuple(bits(self.minus))

    def __repr__(self) -> str:
        p = ",".join(self.plus_labels)
        m = ",".join(self.minus_labels)
        return f"SignedSet({{{p}}}, {{{m}}})"

    def to_json(self) -> dict[str, list[str]]:
        return {"plus": list(self.plus_labels), "minus": list(self.minus_labels)}

    @classmethod
    def from_json(cls, ground: Ground | Iterable[str], data: dict) -> "SignedSet":
        return cls.from_labels(ground, data.get("plus", ()), data.get("minus", ()))


def compose(x: SignedSet, y: SignedSet) -> SignedSet:
    return x.compose(y)


def orthogonal(x: SignedSet, y: SignedSet) -> bool:
    return x.orthogonal(y)


def reorient(x: SignedSet, elements: Iterable[str]) -> SignedSet:
    return x.reorient(elements)


def restrict(x: SignedSet, elements: Iterable[str]) -> SignedSet:
    return x.restrict(elements)


def canonical_rep(x: SignedSet) -> SignedSet:
    """Deterministic choice among ``{X, -X}``: the one whose (sorted plus
    list, sorted minus list) is lexicographically smaller."""
    return x.canonical()
