"""Adjunction-type genus bounds as checkable decision procedures.

Every ``bound_*`` function returns a :class:`TheoremVerdict`. A verdict is
either applicable, carrying the smallest genus not excluded by the
inequality ``LHS <= 2g - 2``, or inapplicable with the failed hypotheses
listed by name. Inapplicability is never an exception.

Sign conventions: when ``b2_plus > 1`` the pairing enters as ``|e|``; when
``b2_plus == 1`` the chamber is pinned to PD[Sigma] and it enters as ``-e``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import PreconditionError, ValidationError
from .reduction import l_invariant, referee_bound
from .swtopology import (
    PD_SIGMA,
    InsertionData,
    ManifoldData,
    SpinCData,
    SurfaceData,
    check_c1_congruence,
    resolve_d,
    wu_parity_check,
)

TH1, TH2, TH2_HIGH, TH3, TH4, KEY = "th1", "th2", "th2_high_degree", "th3", "th4", "key"

NON_TORSION = "non-torsion class"
SELF_INT = "self-intersection nonnegative"
SW = "sw nonvanishing"
BASIC = "basic class"
NEG_DIM = "negative formal dimension"
CHAMBER_POS = "chamber positivity"
B1_GATE = "b1 gate"
TH4_GATE = "th4 gate"


@dataclass(frozen=True)
class AdjunctionCase:
    manifold: ManifoldData
    surface: SurfaceData
    spinc: SpinCData
    d_s: int
    insertion: InsertionData
    orientation_reversed: bool = False

    @classmethod
    def build(
        cls,
        manifold: ManifoldData,
        surface: SurfaceData,
        spinc: SpinCData,
        d_s: Optional[int] = None,
        insertion: Optional[InsertionData] = None,
    ) -> "AdjunctionCase":
        """Resolve ``d_s`` from c1^2, chi, tau when possible; default insertion is ``U^(d/2)``."""
        d = resolve_d(manifold, spinc, d_s)
        if insertion is None:
            insertion = InsertionData.basic(d) if d >= 0 and d % 2 == 0 else InsertionData()
        return cls(manifold, surface, spinc, d, insertion)

    @property
    def e(self) -> int:
        return self.spinc.pairing_e

    @property
    def n(self) -> int:
        return self.surface.self_int

    @property
    def b1(self) -> int:
        return self.manifold.b1

    @property
    def d_b(self) -> int:
        return self.insertion.degree

    @property
    def signed_e(self) -> int:
        """``|e|`` when ``b2_plus > 1``, ``-e`` when ``b2_plus == 1``."""
        return abs(self.e) if self.manifold.b2_plus > 1 else -self.e

    def validate(self) -> "AdjunctionCase":
        if not wu_parity_check(self.e, self.n):
            raise ValidationError(
                "wu_parity", f"|e| + n = {abs(self.e) + self.n} is odd; pairing data cannot come from a Spin^c structure"
            )
        if self.manifold.b2_plus == 1 and self.spinc.chamber != PD_SIGMA:
            raise ValidationError("chamber_required", "b2_plus = 1 requires chamber 'pd_sigma'")
        if self.spinc.c1_square is not None and self.manifold.tau is not None:
            check_c1_congruence(self.spinc.c1_square, self.manifold.tau)
        return self


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    applicable: bool
    failed_hypotheses: tuple[str, ...] = ()
    genus_lower_bound: Optional[int] = None
    degree_cap: Optional[int] = None
    lhs: Optional[int] = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "applicable": self.applicable,
            "failed_hypotheses": list(self.failed_hypotheses),
            "genus_lower_bound": self.genus_lower_bound,
            "degree_cap": self.degree_cap,
        }


@dataclass(frozen=True)
class BoundReport:
    verdicts: tuple[TheoremVerdict, ...]
    best_bound: Optional[int]
    normalization_applied: bool
    l_sigma: int
    l_source: str
    genus: int

    @property
    def genus_excluded(self) -> bool:
        """True when the supplied genus is below the best bound (hypotheses are contradictory)."""
        return self.best_bound is not None and self.genus < self.best_bound

    def verdict(self, theorem_id: str) -> TheoremVerdict:
        return next(v for v in self.verdicts if v.theorem_id == theorem_id)

    def as_dict(self) -> dict:
        return {
            "verdicts": [v.as_dict() for v in self.verdicts],
            "best_bound": self.best_bound,
            "normalization_applied": self.normalization_applied,
            "l_sigma": self.l_sigma,
            "l_source": self.l_source,
            "genus": self.genus,
            "genus_excluded": self.genus_excluded,
        }


def genus_from_lhs(lhs: int) -> int:
    """Smallest positive genus with ``lhs <= 2g - 2``."""
    return max(1, -(-lhs // 2) + 1)


def _common(c: AdjunctionCase) -> list[str]:
    failed = []
    if not c.surface.non_torsion:
        failed.append(NON_TORSION)
    if c.n < 0:
        failed.append(SELF_INT)
    if not c.spinc.sw_nonvanishing:
        failed.append(SW)
    return failed


def _basic(c: AdjunctionCase, failed: list[str]) -> None:
    if c.d_s < 0:
        failed.append(NEG_DIM)
    if not c.insertion.is_basic_for(c.d_s):
        failed.append(BASIC)


def _verdict(theorem_id: str, failed: list[str], lhs: int, **extra) -> TheoremVerdict:
    if failed:
        return TheoremVerdict(theorem_id, False, tuple(failed))
    return TheoremVerdict(theorem_id, True, (), genus_from_lhs(lhs), lhs=lhs, **extra)


def normalize_orientation(c: AdjunctionCase) -> AdjunctionCase:
    """Replace ``[Sigma]`` by ``-[Sigma]`` when ``e > 0`` so that ``e <= 0``.

    Forbidden for ``b2_plus == 1``: the chamber is tied to PD[Sigma].
    """
    if c.manifold.b2_plus == 1:
        raise PreconditionError("orientation reversal is not allowed when b2_plus = 1")
    if c.e <= 0:
        return c
    return replace(c, spinc=replace(c.spinc, pairing_e=-c.e), orientation_reversed=not c.orientation_reversed)


def _reversed(c: AdjunctionCase) -> AdjunctionCase:
    return replace(c, spinc=replace(c.spinc, pairing_e=-c.e), orientation_reversed=not c.orientation_reversed)


def bound_th1(c: AdjunctionCase) -> TheoremVerdict:
    """Basic-class bound ``|e| + n + (2 - min(b1, 1)) d <= 2g - 2``."""
    failed = _common(c)
    _basic(c, failed)
    if c.manifold.b2_plus == 1 and c.signed_e + c.n < 0:
        failed.append(CHAMBER_POS)
    lhs = c.signed_e + c.n + (2 - min(c.b1, 1)) * c.d_s
    return _verdict(TH1, failed, lhs)


def bound_th2(c: AdjunctionCase, l_sigma: int) -> TheoremVerdict:
    """Insertion bound: ``+2 d(b)`` when ``d(b) <= l``, else ``+d(b)``.

    ``l_sigma`` may be any lower bound for l; a too-small value only
    selects the weaker branch, which holds unconditionally.
    """
    failed = _common(c)
    if c.manifold.b2_plus == 1 and c.signed_e + c.n < 0:
        failed.append(CHAMBER_POS)
    if c.d_b <= l_sigma:
        return _verdict(TH2, failed, c.signed_e + c.n + 2 * c.d_b)
    return _verdict(TH2_HIGH, failed, c.signed_e + c.n + c.d_b)


def bound_th3(c: AdjunctionCase) -> TheoremVerdict:
    """``+2 d(b)`` without reference to l, gated by ``|e| + n >= 2 b1``."""
    failed = _common(c)
    if c.signed_e + c.n < 2 * c.b1:
        failed.append(B1_GATE)
    return _verdict(TH3, failed, c.signed_e + c.n + 2 * c.d_b)


def bound_th4(c: AdjunctionCase) -> TheoremVerdict:
    """Basic-class bound ``|e| + n + 2d - 2 b1``, gated by ``|e| + 3n >= 2 b1``."""
    failed = _common(c)
    _basic(c, failed)
    if c.signed_e + 3 * c.n < 2 * c.b1:
        failed.append(TH4_GATE)
    if c.manifold.b2_plus == 1 and c.signed_e + c.n < 0:
        failed.append(CHAMBER_POS)
    return _verdict(TH4, failed, c.signed_e + c.n + 2 * c.d_s - 2 * c.b1)


def max_insertion_degree(c: AdjunctionCase) -> TheoremVerdict:
    """Degree cap ``d(b) <= g - b1`` and the equivalent bound ``g >= d(b) + b1``."""
    failed = _common(c)
    if c.signed_e + c.n < 2 * c.b1:
        failed.append(B1_GATE)
    if failed:
        return TheoremVerdict(KEY, False, tuple(failed))
    bound = c.d_b + c.b1
    return TheoremVerdict(KEY, True, (), max(1, bound), degree_cap=c.surface.genus - c.b1, lhs=bound)


def _stronger(v: TheoremVerdict, w: TheoremVerdict) -> TheoremVerdict:
    if not w.applicable:
        return v
    if not v.applicable or w.genus_lower_bound > v.genus_lower_bound:
        return w
    return v


def l_for(c: AdjunctionCase) -> tuple[int, str]:
    """l(Sigma) from the embedding matrix when known, else the ``g - b1`` lower bound."""
    if c.surface.embedding is not None:
        return l_invariant(c.surface.embedding), "embedding"
    return referee_bound(c.surface.genus, c.b1), "referee"


def evaluate(c: AdjunctionCase, l_sigma: int) -> tuple[TheoremVerdict, ...]:
    return (bound_th1(c), bound_th2(c, l_sigma), bound_th3(c), bound_th4(c), max_insertion_degree(c))


def best_bound(c: AdjunctionCase, l_sigma: Optional[int] = None) -> BoundReport:
    """Run every theorem on ``c`` and keep the strongest applicable bound."""
    c.validate()
    if l_sigma is None:
        l_sigma, source = l_for(c)
    else:
        source = "given"
    normalized = False
    if c.manifold.b2_plus > 1:
        normalized = c.e > 0
        base = normalize_orientation(c)
        verdicts = tuple(
            _stronger(v, w) for v, w in zip(evaluate(base, l_sigma), evaluate(_reversed(base), l_sigma))
        )
    else:
        verdicts = evaluate(c, l_sigma)
    bounds = [v.genus_lower_bound for v in verdicts if v.applicable]
    return BoundReport(
        verdicts=verdicts,
        best_bound=max(bounds) if bounds else None,
        normalization_applied=normalized,
        l_sigma=l_sigma,
        l_source=source,
        genus=c.surface.genus,
    )
