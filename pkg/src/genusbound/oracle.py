"""Brute-force checks that share no logic with the constructive algorithms.

* :func:`random_symplectic_basis` multiplies random elementary moves.
* :func:`exhaustive_l` searches a ball of the move graph for the basis with
  the most A-vectors in the kernel, never doing linear algebra on the
  kernel itself.

Search budget for :func:`exhaustive_l`, worst case (whole budget searched,
single core). The ball of Lagrangians is built once per genus and cached,
so the first call pays for growing it and later calls only score it.

=====  ======  =======  ==========  ===========
genus  budget  states   first call  later calls
=====  ======  =======  ==========  ===========
1      any     <= 3     < 0.01 s    < 0.01 s
2      4       6508     0.3 s       0.07 s
2      5       51426    3 s         0.7 s
2      6       396980   23 s        4 s
3      3       6964     0.6 s       0.13 s
3      4       128974   11 s        2.6 s
=====  ======  =======  ==========  ===========

Genus 3 at budget 5 exceeds the default ``max_states`` and returns a
partial result.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from . import symplattice as sp
from ._exact import integer_rows
from .reduction import EmbeddingMap
from .symplattice import SymplecticBasis, form_eval, unit

Letter = tuple  # (kind, *params)


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple[Letter, ...]
    seed: int
    genus: int

    def apply(self, b: SymplecticBasis | None = None) -> SymplecticBasis:
        b = b if b is not None else SymplecticBasis.identity(self.genus)
        for letter in self.letters:
            b = apply_letter(b, letter)
        return b


def apply_letter(b: SymplecticBasis, letter: Letter) -> SymplecticBasis:
    kind, *params = letter
    g = b.genus
    if kind == "transvection":
        coeffs, c = params
        u = tuple(sum(x * v[k] for x, v in zip(coeffs, b.vectors)) for k in range(2 * g))
        return sp.transvection(b, u, c)
    if kind == "lemma21":
        return sp.lemma21_change(b, *params)
    if kind == "pair_completion":
        return sp.pair_completion(b, *params)
    if kind == "ab_swap":
        return sp.ab_swap(b, *params)
    if kind == "swap":
        return sp.swap_pairs(b, *params)
    raise ValueError(f"unknown move {kind!r}")


def random_word(g: int, steps: int, seed: int, max_param: int = 3) -> GeneratorWord:
    rng = random.Random(seed)
    kinds = ["transvection", "ab_swap", "pair_completion", "swap"] + (["lemma21"] if g >= 3 else [])
    if g < 2:
        kinds = ["transvection", "ab_swap"]
    letters = []
    for _ in range(steps):
        kind = rng.choice(kinds)
        if kind == "transvection":
            coeffs = [0] * (2 * g)
            for k in rng.sample(range(2 * g), rng.randint(1, min(2, 2 * g))):
                coeffs[k] = rng.choice((-1, 1))
            letters.append((kind, tuple(coeffs), rng.choice((-1, 1)) * rng.randint(1, max_param)))
        elif kind == "ab_swap":
            letters.append((kind, rng.randrange(g)))
        elif kind == "swap":
            letters.append((kind, *rng.sample(range(g), 2)))
        elif kind == "pair_completion":
            m, n = rng.sample(range(g), 2)
            while True:
                a_m, a_n = rng.randint(-max_param, max_param), rng.randint(-max_param, max_param)
                if _coprime(a_m, a_n):
                    break
            letters.append((kind, m, n, a_m, a_n))
        else:
            i, j, k = rng.sample(range(g), 3)
            letters.append((kind, i, j, k, rng.randint(-max_param, max_param), rng.randint(-max_param, max_param)))
    return GeneratorWord(tuple(letters), seed, g)


def _coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def random_symplectic_basis(g: int, steps: int, seed: int) -> SymplecticBasis:
    """Deterministic product of ``steps`` random elementary moves."""
    return random_word(g, steps, seed).apply()


# Search over the move graph. The count of killed A-vectors depends only on
# the A-span L of a basis: the best basis of L puts a basis of the saturated
# sublattice L & ker first, so the count is dim(L & ker). The search thus
# runs on the orbit of the standard Lagrangian L0 = span(A_1..A_g) under
# left multiplication by global transvections and A/B swaps. Moves that fix
# the A-span (re-basing it, shearing the B-part, lemma21 changes, pair
# completions) are free in this graph. A state is the rational span of L,
# keyed by its reduced row echelon form with primitive integer rows.


def _canon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Fraction-free Gauss-Jordan; returns (primitive RREF rows, rank)."""
    R = [list(r) for r in rows]
    n = len(R)
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, n) if R[i][col]), None)
        if piv is None:
            continue
        R[top], R[piv] = R[piv], R[top]
        p = R[top]
        pv = p[col]
        for i in range(n):
            f = R[i][col]
            if i != top and f:
                row = [pv * x - f * y for x, y in zip(R[i], p)]
                d = 0
                for x in row:
                    d = gcd(d, x)
                R[i] = [x // d for x in row] if d > 1 else row
        top += 1
        if top == n:
            break
    out = []
    for r in R[:top]:
        d = 0
        for x in r:
            d = gcd(d, x)
        if next(x for x in r if x) < 0:
            d = -d
        out.append(tuple(x // d for x in r))
    return tuple(out), top


def _directions(g: int) -> list[tuple[int, ...]]:
    """``A_i``, ``B_i`` and ``X_i +- Y_j`` for ``X, Y`` in ``{A, B}``, ``i < j``."""
    n = 2 * g
    dirs = []
    for i in range(g):
        dirs.append(unit(g, i))
        dirs.append(unit(g, g + i))
    for i, j in combinations(range(g), 2):
        for sgn in (1, -1):
            for oi, oj in ((0, 0), (g, g), (0, g), (g, 0)):
                v = [0] * n
                v[oi + i] = 1
                v[oj + j] = sgn
                dirs.append(tuple(v))
    return dirs


def _neighbours(L: tuple, g: int, dirs) -> Iterator[list]:
    n = 2 * g
    for u in dirs:
        pairings = [form_eval(x, u, g) for x in L]
        if not any(pairings):
            continue
        for c in (1, -1):
            yield [tuple(x[t] + c * w * u[t] for t in range(n)) if w else x for x, w in zip(L, pairings)]
    for i in range(g):
        yield [tuple(-x[g + i] if t == i else (x[i] if t == g + i else x[t]) for t in range(n)) for x in L]


class _Ball:
    """Breadth-first layers of the Lagrangian orbit, grown on demand."""

    def __init__(self, g: int):
        self.g = g
        start, _ = _canon([unit(g, i) for i in range(g)], 2 * g)
        self.layers: list[list[tuple]] = [[start]]
        self.seen = {start}
        self.dirs = _directions(g)

    def grow(self, max_states: int) -> bool:
        """Add one layer; False if that would exceed ``max_states``."""
        nxt = []
        for L in self.layers[-1]:
            for cand in _neighbours(L, self.g, self.dirs):
                key, _ = _canon(cand, 2 * self.g)
                if key not in self.seen:
                    self.seen.add(key)
                    nxt.append(key)
            if len(self.seen) > max_states:
                for key in nxt:
                    self.seen.discard(key)
                return False
        self.layers.append(nxt)
        return True


_BALLS: dict[int, _Ball] = {}


@dataclass(frozen=True)
class ExhaustiveResult:
    value: int
    stabilized: bool
    budget_used: int
    states: int
    partial: bool
    history: tuple[int, ...]


def exhaustive_l(e: EmbeddingMap, move_budget: int, max_states: int = 400_000) -> ExhaustiveResult:
    """Best count of killed A-vectors over bases within ``move_budget`` moves.

    ``history[k]`` is the best count within ``k`` moves. The whole budget is
    searched unless the count reaches ``min(g, dim ker)``, which no basis
    can beat. The value is *stabilized* when it reaches that cap or when the
    last two budget increments brought no improvement. If the search ball
    would exceed ``max_states`` the best value so far is returned with
    ``partial=True``.
    """
    g = e.genus
    rows = integer_rows(e.matrix)
    ball = _BALLS.setdefault(g, _Ball(g))
    # plain rank of the map; no use of the form on the kernel
    cap = min(g, 2 * g - (_canon(rows, 2 * g)[1] if rows else 0))

    def score(L) -> int:
        if not rows:
            return g
        image = [[sum(x * y for x, y in zip(row, v)) for row in rows] for v in L]
        return g - _canon(image, len(rows))[1]

    history: list[int] = []
    best = 0
    partial = False
    for depth in range(move_budget + 1):
        if depth == len(ball.layers) and not ball.grow(max_states):
            partial = True
            break
        for L in ball.layers[depth]:
            best = max(best, score(L))
            if best == cap:
                break
        history.append(best)
        if best == cap:
            break
    plateau = len(history) >= 3 and history[-1] == history[-3]
    stabilized = not partial and (best == cap or plateau)
    states = sum(len(layer) for layer in ball.layers[: len(history)])
    return ExhaustiveResult(best, stabilized, len(history) - 1, states, partial, tuple(history))
