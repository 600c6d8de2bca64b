"""Integral symplectic lattices of rank 2g.

A vector is a tuple of ``2g`` Python ints: its coordinates with respect to a
fixed reference basis ``A_1..A_g, B_1..B_g``. A :class:`SymplecticBasis` is a
list of ``2g`` such vectors, ordered the same way. Indices are 0-based
throughout, so ``A_1`` is ``basis.a(0)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from ._exact import bezout, det_int, gcd_all
from .errors import InputError, PreconditionError

Vector = tuple[int, ...]


def form_eval(u: Sequence[int], v: Sequence[int], g: int | None = None) -> int:
    """Standard symplectic form ``sum_i u_i v_{g+i} - u_{g+i} v_i``.

    >>> form_eval((2, 3, 0, 0), (0, 0, 2, -1))
    1
    """
    if g is None:
        g = len(u) // 2
    if len(u) != 2 * g or len(v) != 2 * g:
        raise InputError(f"form_eval expects two vectors of length {2 * g}, got {len(u)} and {len(v)}")
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def unit(g: int, index: int) -> Vector:
    """Reference vector number ``index`` (``A_j`` is ``j``, ``B_j`` is ``g + j``)."""
    return tuple(1 if k == index else 0 for k in range(2 * g))


def _lin(*terms: tuple[int, Sequence[int]]) -> Vector:
    n = len(terms[0][1])
    return tuple(sum(c * v[k] for c, v in terms) for k in range(n))


class BasisCheck(NamedTuple):
    """Result of :func:`verify_basis`; truthy iff the basis is symplectic."""

    ok: bool
    pair: tuple[str, str] | None = None
    value: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SymplecticBasis:
    genus: int
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        g = self.genus
        if g < 1:
            raise InputError(f"genus must be positive, got {g}")
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        if len(vecs) != 2 * g or any(len(v) != 2 * g for v in vecs):
            raise InputError(f"a genus-{g} basis needs {2 * g} vectors of length {2 * g}")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def identity(cls, g: int) -> "SymplecticBasis":
        return cls(g, tuple(unit(g, k) for k in range(2 * g)))

    @classmethod
    def from_parts(cls, a_part: Sequence[Sequence[int]], b_part: Sequence[Sequence[int]]) -> "SymplecticBasis":
        return cls(len(a_part), tuple(a_part) + tuple(b_part))

    def a(self, j: int) -> Vector:
        return self.vectors[j]

    def b(self, j: int) -> Vector:
        return self.vectors[self.genus + j]

    @property
    def a_part(self) -> tuple[Vector, ...]:
        return self.vectors[: self.genus]

    @property
    def b_part(self) -> tuple[Vector, ...]:
        return self.vectors[self.genus :]

    def coordinate_matrix(self) -> list[list[int]]:
        """Matrix whose k-th column is the k-th basis vector."""
        n = 2 * self.genus
        return [[self.vectors[c][r] for c in range(n)] for r in range(n)]

    def determinant(self) -> int:
        return det_int(self.coordinate_matrix())

    def replace(self, updates: dict[int, Sequence[int]]) -> "SymplecticBasis":
        vecs = list(self.vectors)
        for k, v in updates.items():
            vecs[k] = tuple(v)
        return SymplecticBasis(self.genus, tuple(vecs))

    def label(self, k: int) -> str:
        g = self.genus
        return f"A{k + 1}" if k < g else f"B{k - g + 1}"


def standard_value(g: int, i: int, j: int) -> int:
    """Entry ``(i, j)`` of the standard form matrix J in the A..B ordering."""
    if i < g and j == i + g:
        return 1
    if i >= g and j == i - g:
        return -1
    return 0


def verify_basis(b: SymplecticBasis) -> BasisCheck:
    """Check all pairings against the standard form; report the first violation.

    Antisymmetry makes the lower triangle redundant, so only ``i <= j`` is
    evaluated (the diagonal is identically zero and skipped as well).
    """
    g = b.genus
    vecs = b.vectors
    n = 2 * g
    for i in range(n):
        u = vecs[i]
        ua, ub = u[:g], u[g:]
        for j in range(i + 1, n):
            v = vecs[j]
            val = sum(x * y for x, y in zip(ua, v[g:])) - sum(x * y for x, y in zip(ub, v[:g]))
            if val != standard_value(g, i, j):
                return BasisCheck(False, (b.label(i), b.label(j)), val)
    return BasisCheck(True)


def lemma21_change(b: SymplecticBasis, i: int, j: int, k: int, r: int, s: int) -> SymplecticBasis:
    """Shear two A-vectors along a third and compensate in the third B-vector.

    ``A_i -> A_i - r A_k``, ``A_j -> A_j - s A_k``, ``B_k -> B_k + r B_i + s B_j``.
    Needs ``i, j, k`` pairwise distinct, hence genus at least 3.
    """
    g = b.genus
    if len({i, j, k}) != 3:
        raise InputError(f"indices must be pairwise distinct, got ({i}, {j}, {k})")
    if not all(0 <= x < g for x in (i, j, k)):
        raise InputError(f"indices ({i}, {j}, {k}) out of range for genus {g}")
    return b.replace({
        i: _lin((1, b.a(i)), (-r, b.a(k))),
        j: _lin((1, b.a(j)), (-s, b.a(k))),
        g + k: _lin((1, b.b(k)), (r, b.b(i)), (s, b.b(j))),
    })


def pair_completion(
    b: SymplecticBasis,
    m: int,
    n: int,
    a_m: int,
    a_n: int,
    p: int | None = None,
    q: int | None = None,
) -> SymplecticBasis:
    """Put the primitive combination ``a_m A_m + a_n A_n`` into slot ``m``.

    With ``p a_m + q a_n = 1`` the pairs ``m`` and ``n`` become::

        A_m' = a_m A_m + a_n A_n      B_m' = p B_m + q B_n
        A_n' = p A_n - q A_m          B_n' = a_m B_n - a_n B_m

    ``(p, q)`` default to :func:`genusbound._exact.bezout`.
    """
    g = b.genus
    if m == n:
        raise InputError("pair_completion needs two distinct slots")
    if not (0 <= m < g and 0 <= n < g):
        raise InputError(f"slots ({m}, {n}) out of range for genus {g}")
    if gcd_all((a_m, a_n)) != 1:
        raise PreconditionError(f"gcd({a_m}, {a_n}) must be 1")
    if p is None or q is None:
        p, q = bezout(a_m, a_n)
    elif p * a_m + q * a_n != 1:
        raise PreconditionError(f"({p}, {q}) are not Bezout coefficients for ({a_m}, {a_n})")
    Am, An, Bm, Bn = b.a(m), b.a(n), b.b(m), b.b(n)
    return b.replace({
        m: _lin((a_m, Am), (a_n, An)),
        n: _lin((p, An), (-q, Am)),
        g + m: _lin((p, Bm), (q, Bn)),
        g + n: _lin((a_m, Bn), (-a_n, Bm)),
    })


def sign_flip(b: SymplecticBasis, j: int) -> SymplecticBasis:
    """``(A_j, B_j) -> (-A_j, -B_j)``."""
    g = b.genus
    return b.replace({j: _lin((-1, b.a(j))), g + j: _lin((-1, b.b(j)))})


def swap_pairs(b: SymplecticBasis, i: int, j: int) -> SymplecticBasis:
    """Exchange the pairs ``(A_i, B_i)`` and ``(A_j, B_j)``."""
    g = b.genus
    return b.replace({i: b.a(j), j: b.a(i), g + i: b.b(j), g + j: b.b(i)})


def ab_swap(b: SymplecticBasis, j: int) -> SymplecticBasis:
    """``(A_j, B_j) -> (B_j, -A_j)``; applying it four times is the identity."""
    g = b.genus
    return b.replace({j: b.b(j), g + j: _lin((-1, b.a(j)))})


def pair_sl2(b: SymplecticBasis, j: int, alpha: int, beta: int, gamma: int, delta: int) -> SymplecticBasis:
    """Unimodular change inside one pair: ``A_j' = alpha A_j + beta B_j``, ``B_j' = gamma A_j + delta B_j``."""
    if alpha * delta - beta * gamma != 1:
        raise PreconditionError("pair_sl2 needs a determinant-one 2x2 matrix")
    g = b.genus
    Aj, Bj = b.a(j), b.b(j)
    return b.replace({j: _lin((alpha, Aj), (beta, Bj)), g + j: _lin((gamma, Aj), (delta, Bj))})


def transvection(b: SymplecticBasis, u: Sequence[int], c: int = 1) -> SymplecticBasis:
    """Apply ``x -> x + c * omega(x, u) * u`` to every basis vector."""
    g = b.genus
    return SymplecticBasis(g, tuple(_lin((1, v), (c * form_eval(v, u, g), u)) for v in b.vectors))
