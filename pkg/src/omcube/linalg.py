"""Exact linear algebra over the rationals (and integers where it is cheaper)."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def frac(x) -> Fraction:
    """Rational from an int, Fraction or ``"p/q"`` / decimal string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def integer_scaled(v: Sequence[Fraction]) -> list[int]:
    """Positive multiple of ``v`` with integer entries."""
    d = 1
    for x in v:
        d = lcm(d, x.denominator)
    return [int(x * d) for x in v]


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for j in range(i + 1, k):
                if m[j][i] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[i][i]
        for j in range(i + 1, k):
            mj = m[j]
            mi = m[i]
            f = mj[i]
            for c in range(i + 1, k):
                mj[c] = (piv * mj[c] - f * mi[c]) // prev
        prev = piv
    return sign * m[k - 1][k - 1]


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [[frac(x) for x in r] for r in rows]
    k = len(m)
    out = Fraction(1)
    for i in range(k):
        piv = next((j for j in range(i, k) if m[j][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            out = -out
        out *= m[i][i]
        for j in range(i + 1, k):
            f = m[j][i] / m[i][i]
            if f:
                for c in range(i, k):
                    m[j][c] -= f * m[i][c]
    return out


def row_reduce(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[frac(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((j for j in range(r, len(m)) if m[j][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for j in range(len(m)):
            if j != r and m[j][c] != 0:
                f = m[j][c]
                m[j] = [a - f * b for a, b in zip(m[j], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(row_reduce(rows)[1])


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """The unique solution of ``a x = b``, or None if there is none or it is
    not unique."""
    aug = [list(map(frac, row)) + [frac(bi)] for row, bi in zip(a, b)]
    ncols = len(a[0])
    red, piv = row_reduce(aug)
    if ncols in piv or len(piv) != ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return x


def nullspace(rows: Sequence[Sequence[Fraction]]) -> list[Vector]:
    red, piv = row_reduce(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    k = len(m)
    aug = [list(map(frac, row)) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    red, piv = row_reduce(aug)
    if piv[:k] != list(range(k)) or len(red) < k:
        raise ZeroDivisionError("matrix is singular")
    return [row[k:] for row in red]


def matvec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """True iff u and v span the same line (both nonzero)."""
    if not any(u) or not any(v):
        return False
    return rank([u, v]) == 1
