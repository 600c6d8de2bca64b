"""Completing primitive vectors to symplectic bases, and the invariant l.

The descent in :func:`complete_primitive` works on the coefficients of a
vector ``v = sum a_j A_j`` in the A-span of a symplectic basis. With three
or more nonzero coefficients it picks the pair with the smallest gcd ``d``
and shears a third coefficient into ``[0, d - 1]``; with two it finishes by
:func:`~genusbound.symplattice.pair_completion`; with one it fixes the sign.
Each shear either kills a coefficient or strictly lowers the smallest
pairwise gcd, so the loop terminates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from . import symplattice as sp
from ._exact import bezout, gcd_all, integer_rows, nullspace, primitive_integer, rank, to_fraction, xgcd
from .errors import CorruptTraceError, InputError, InvariantViolation, PreconditionError
from .symplattice import SymplecticBasis


@dataclass(frozen=True)
class Step:
    """One recorded basis change.

    ``args`` by kind: ``lemma21 (i, j, k, r, s)``, ``pair_completion
    (m, n, a_m, a_n, p, q)``, ``sign_flip (j,)``, ``swap (i, j)``,
    ``pair_sl2 (j, alpha, beta, gamma, delta)``.
    """

    kind: str
    args: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "args": list(self.args)}


_APPLY = {
    "lemma21": (5, sp.lemma21_change),
    "pair_completion": (6, sp.pair_completion),
    "sign_flip": (1, sp.sign_flip),
    "swap": (2, sp.swap_pairs),
    "pair_sl2": (5, sp.pair_sl2),
}


def apply_step(b: SymplecticBasis, step: Step) -> SymplecticBasis:
    try:
        arity, fn = _APPLY[step.kind]
    except KeyError:
        raise CorruptTraceError(f"unknown step kind {step.kind!r}") from None
    if len(step.args) != arity:
        raise CorruptTraceError(f"{step.kind} expects {arity} arguments, got {len(step.args)}")
    try:
        return fn(b, *step.args)
    except (InputError, PreconditionError) as exc:
        raise CorruptTraceError(f"step {step.kind}{step.args} is invalid: {exc}") from exc


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Step, ...]
    final_basis: SymplecticBasis
    slot: int
    initial: SymplecticBasis
    # (N, min pairwise gcd) of the coefficient vector before each shear round
    rounds: tuple[tuple[int, int], ...] = field(default=())

    @property
    def vector(self) -> tuple[int, ...]:
        return self.final_basis.a(self.slot)

    def summary(self) -> dict:
        return {
            "slot": self.slot,
            "vector": list(self.vector),
            "step_count": len(self.steps),
            "steps": [s.as_dict() for s in self.steps],
            "rounds": [list(r) for r in self.rounds],
        }


def replay(trace: ReductionTrace, check: bool = True) -> SymplecticBasis:
    """Re-apply ``trace.steps`` starting from ``trace.initial``.

    With ``check`` set, a result differing from ``trace.final_basis`` raises
    :class:`CorruptTraceError`.
    """
    b = trace.initial
    for step in trace.steps:
        b = apply_step(b, step)
    if check and b != trace.final_basis:
        raise CorruptTraceError("replayed basis differs from the recorded final basis")
    return b


def min_pair_gcd(coeffs: Sequence[int]) -> int:
    """Smallest ``gcd(|a_i|, |a_j|)`` over pairs of nonzero entries.

    >>> min_pair_gcd((6, 10, 15))
    2
    """
    nz = [abs(c) for c in coeffs if c]
    if len(nz) < 2:
        raise PreconditionError("min_pair_gcd needs at least two nonzero entries")
    return min(gcd(x, y) for x, y in combinations(nz, 2))


def descent_metric(coeffs: Sequence[int]) -> tuple[int, int]:
    """``(N, min_pair_gcd)``; the gcd slot is 0 when fewer than two entries are nonzero."""
    n = sum(1 for c in coeffs if c)
    return n, (min_pair_gcd(coeffs) if n >= 2 else 0)


def _min_gcd_pair(a: Sequence[int], nz: Sequence[int]) -> tuple[int, int]:
    # ties go to the lexicographically smallest index pair
    return min(combinations(nz, 2), key=lambda ij: (gcd(a[ij[0]], a[ij[1]]), ij))


def complete_primitive(
    coeffs: Sequence[int],
    basis: SymplecticBasis | None = None,
    target: int | None = None,
) -> ReductionTrace:
    """Find a symplectic basis having ``v = sum coeffs[j] * A_j`` as an A-vector.

    ``coeffs`` are taken relative to the A-part of ``basis`` (the reference
    basis by default). Only pairs whose coefficient is nonzero are touched,
    plus ``target`` if given, which is where ``v`` ends up.
    """
    g = len(coeffs)
    if g < 1:
        raise PreconditionError("empty coefficient vector")
    a = [int(c) for c in coeffs]
    if not any(a):
        raise PreconditionError("the zero vector cannot be completed")
    if gcd_all(a) != 1:
        raise PreconditionError(f"coefficients {tuple(a)} are not primitive (gcd {gcd_all(a)})")
    b = basis if basis is not None else SymplecticBasis.identity(g)
    if b.genus != g:
        raise InputError(f"{g} coefficients given for a genus-{b.genus} basis")
    if target is not None and not 0 <= target < g:
        raise InputError(f"target slot {target} out of range")
    initial = b
    v = tuple(sum(c * vec[k] for c, vec in zip(a, b.a_part)) for k in range(2 * g))

    steps: list[Step] = []
    rounds: list[tuple[int, int]] = []
    while True:
        nz = [j for j, c in enumerate(a) if c]
        if len(nz) >= 3:
            m, m1 = _min_gcd_pair(a, nz)
            k = next(j for j in nz if j not in (m, m1))
            d, x, y = xgcd(a[m], a[m1])
            t = -(a[k] // d)
            r, s = t * x, t * y
            rounds.append(descent_metric(a))
            step = Step("lemma21", (m, m1, k, r, s))
            a[k] += r * a[m] + s * a[m1]
        elif len(nz) == 2:
            m, n = nz
            p, q = bezout(a[m], a[n])
            step = Step("pair_completion", (m, n, a[m], a[n], p, q))
            a[m], a[n] = 1, 0
        else:
            slot = nz[0]
            if a[slot] == -1:
                steps.append(Step("sign_flip", (slot,)))
                b = sp.sign_flip(b, slot)
                a[slot] = 1
            break
        steps.append(step)
        b = apply_step(b, step)

    if target is not None and target != slot:
        steps.append(Step("swap", (slot, target)))
        b = sp.swap_pairs(b, slot, target)
        slot = target

    if b.a(slot) != v or not sp.verify_basis(b):
        raise InvariantViolation(f"descent on {tuple(coeffs)} produced an invalid basis")
    return ReductionTrace(tuple(steps), b, slot, initial, tuple(rounds))


@dataclass(frozen=True)
class EmbeddingMap:
    """Rational matrix of the map on first homology, ``b1`` rows by ``2g`` columns.

    Columns are indexed like basis vectors: ``A_1..A_g`` then ``B_1..B_g``.
    """

    genus: int
    ambient_b1: int
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.genus < 1:
            raise InputError(f"genus must be positive, got {self.genus}")
        if self.ambient_b1 < 0:
            raise InputError("b1 must be non-negative")
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.matrix)
        if len(rows) != self.ambient_b1:
            raise InputError(f"matrix has {len(rows)} rows but b1 = {self.ambient_b1}")
        if any(len(row) != 2 * self.genus for row in rows):
            raise InputError(f"every row needs exactly {2 * self.genus} entries")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def zero(cls, g: int, b1: int) -> "EmbeddingMap":
        return cls(g, b1, tuple((0,) * (2 * g) for _ in range(b1)))

    def image(self, v: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in self.matrix)

    def kills(self, v: Sequence[int]) -> bool:
        return not any(self.image(v))

    def kernel(self) -> list[list[Fraction]]:
        return nullspace(self.matrix, 2 * self.genus)


def l_invariant(e: EmbeddingMap) -> int:
    """Largest number of A-vectors of one symplectic basis killed rationally.

    Equal to the dimension of a maximal isotropic subspace of the kernel
    ``K``, namely ``dim K - rank(form restricted to K) / 2``.
    """
    K = e.kernel()
    g = e.genus
    gram = [[sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g)) for v in K] for u in K]
    rk = rank(gram) if K else 0
    if rk % 2:
        raise InvariantViolation("an alternating form has odd rank")
    return len(K) - rk // 2


@dataclass(frozen=True)
class ConstructiveL:
    value: int
    basis: SymplecticBasis
    steps: tuple[Step, ...]


def l_lower_bound_constructive(e: EmbeddingMap) -> ConstructiveL:
    """Build a witness basis greedily, one kernel A-vector at a time.

    With ``t`` A-vectors already fixed, look for a primitive kernel vector in
    the span of the remaining pairs, rotate each remaining pair so the vector
    lies in the A-span, run :func:`complete_primitive` into slot ``t``, repeat.
    """
    g = e.genus
    rows = integer_rows(e.matrix)
    b = SymplecticBasis.identity(g)
    steps: list[Step] = []
    t = 0
    while t < g:
        free = list(range(t, g))
        cols = [b.a(j) for j in free] + [b.b(j) for j in free]
        restricted = [[sum(x * c[k] for k, x in enumerate(row)) for c in cols] for row in rows]
        ker = nullspace(restricted, len(cols))
        if not ker:
            break
        y = primitive_integer(ker[0])
        h = len(free)
        coeffs = [0] * g
        for pos, j in enumerate(free):
            x, z = y[pos], y[h + pos]
            d = gcd(x, z)
            if d == 0:
                continue
            alpha, beta = x // d, z // d
            if (alpha, beta) != (1, 0):
                _, u, w = xgcd(alpha, beta)
                step = Step("pair_sl2", (j, alpha, beta, -w, u))
                steps.append(step)
                b = apply_step(b, step)
            coeffs[j] = d
        trace = complete_primitive(coeffs, basis=b, target=t)
        steps.extend(trace.steps)
        b = trace.final_basis
        t += 1

    if not sp.verify_basis(b) or not all(e.kills(b.a(j)) for j in range(t)):
        raise InvariantViolation("constructive witness basis failed its self-check")
    return ConstructiveL(t, b, tuple(steps))


def referee_bound(g: int, b1: int) -> int:
    """``max(0, g - b1)``: a lower bound for l of any genus-g surface when ``b1(M) = b1``."""
    return max(0, g - b1)
