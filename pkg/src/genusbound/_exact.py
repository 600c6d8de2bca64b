"""Exact integer and rational helpers: Euclid, elimination, determinants.

Everything here works on plain Python ``int`` and ``fractions.Fraction`` so
that no intermediate value is ever rounded or overflows.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(d, x, y)`` with ``x*a + y*b == d == gcd(a, b) >= 0``."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def bezout(a: int, b: int) -> tuple[int, int]:
    """Canonical ``(p, q)`` with ``p*a + q*b == 1``.

    ``p`` is reduced into ``[0, |b|)`` when ``b != 0``; for ``b == 0`` the
    only choice is ``(a, 0)`` with ``a = +-1``.

    >>> bezout(2, 3)
    (2, -1)
    >>> bezout(0, 1)
    (0, 1)
    """
    d, x, _ = xgcd(a, b)
    if d != 1:
        raise PreconditionError(f"gcd({a}, {b}) = {d}, Bezout coefficients for 1 do not exist")
    if b == 0:
        return a, 0
    p = x % abs(b)
    q = (1 - p * a) // b
    return p, q


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string. Floats are rejected."""
    if isinstance(value, bool):
        raise InputError(f"boolean {value!r} is not a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m is None:
            raise InputError(f"cannot parse {value!r} as an exact rational 'p/q'")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise InputError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise InputError(f"{value!r} ({type(value).__name__}) is not an exact rational")


def format_fraction(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals. Returns ``(R, pivots)``."""
    R = [[Fraction(x) for x in row] for row in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(R)) if R[i][col] != 0), None)
        if piv is None:
            continue
        R[top], R[piv] = R[piv], R[top]
        inv = 1 / R[top][col]
        R[top] = [x * inv for x in R[top]]
        for i in range(len(R)):
            if i != top and R[i][col] != 0:
                f = R[i][col]
                R[i] = [x - f * y for x, y in zip(R[i], R[top])]
        pivots.append(col)
        top += 1
        if top == len(R):
            break
    return R, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows @ x == 0}`` in ``Q^ncols``, one vector per free column."""
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -R[i][f]
        basis.append(x)
    return basis


def primitive_integer(vec: Sequence[Fraction]) -> list[int]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in vec), 1)
    ints = [int(Fraction(x) * den) for x in vec]
    g = gcd_all(ints)
    if g == 0:
        raise PreconditionError("zero vector has no primitive representative")
    return [x // g for x in ints]


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Clear denominators row by row; the row space is unchanged."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
        out.append([int(x * den) for x in fr])
    return out


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss fraction-free elimination."""
    M = [list(row) for row in matrix]
    n = len(M)
    if any(len(row) != n for row in M):
        raise InputError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1
