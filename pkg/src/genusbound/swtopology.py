"""Integer bookkeeping for the ambient 4-manifold, Spin^c data and blow-ups.

Nothing here touches the Seiberg-Witten equations. Nonvanishing of an
invariant is a boolean hypothesis carried along with the data; the only
rule applied to it is that it survives a blow-up.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Optional

from .errors import HypothesisError, InputError
from .reduction import EmbeddingMap

PD_SIGMA = "pd_sigma"
NOT_APPLICABLE = "not_applicable"
CHAMBERS = (PD_SIGMA, NOT_APPLICABLE)


class CongruenceWarning(UserWarning):
    """c1^2 is not congruent to the signature mod 8."""


@dataclass(frozen=True)
class ManifoldData:
    b1: int
    b2_plus: int
    chi: Optional[int] = None
    tau: Optional[int] = None

    def __post_init__(self):
        if self.b1 < 0:
            raise InputError(f"b1 must be non-negative, got {self.b1}")
        if self.b2_plus < 1:
            raise InputError(f"b2_plus must be at least 1, got {self.b2_plus}")


@dataclass(frozen=True)
class InsertionData:
    """Degrees of ``a`` in A(M) and ``b`` in A(Sigma); ``b = U^u_power * (one-dim classes)``."""

    u_power: int = 0
    surface_one_dim_count: int = 0
    ambient_degree: int = 0

    def __post_init__(self):
        if min(self.u_power, self.surface_one_dim_count, self.ambient_degree) < 0:
            raise InputError("insertion degrees must be non-negative")

    @property
    def degree(self) -> int:
        """Degree of ``b``: U has degree two, classes from H_1 degree one."""
        return 2 * self.u_power + self.surface_one_dim_count

    @classmethod
    def basic(cls, d_s: int) -> "InsertionData":
        """The insertion ``U^(d/2)`` defining a basic class."""
        if d_s < 0 or d_s % 2:
            raise InputError(f"U^(d/2) needs an even non-negative d, got {d_s}")
        return cls(u_power=d_s // 2)

    def is_basic_for(self, d_s: int) -> bool:
        return d_s >= 0 and d_s % 2 == 0 and self == InsertionData(u_power=d_s // 2)


@dataclass(frozen=True)
class SpinCData:
    name: str
    pairing_e: int
    sw_nonvanishing: bool = True
    chamber: str = NOT_APPLICABLE
    c1_square: Optional[int] = None

    def __post_init__(self):
        if self.chamber not in CHAMBERS:
            raise InputError(f"chamber must be one of {CHAMBERS}, got {self.chamber!r}")


@dataclass(frozen=True)
class SurfaceData:
    genus: int
    self_int: int
    non_torsion: bool = True
    embedding: Optional[EmbeddingMap] = None

    def __post_init__(self):
        if self.genus < 1:
            raise InputError(f"surface genus must be positive, got {self.genus}")
        if self.embedding is not None and self.embedding.genus != self.genus:
            raise InputError("embedding genus differs from surface genus")


@dataclass(frozen=True)
class BlowUpSpec:
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise InputError(f"number of exceptional spheres must be >= 0, got {self.r}")


def d_invariant(c1_square: int, chi: int, tau: int) -> int:
    """Formal dimension ``(c1^2 - (2 chi + 3 tau)) / 4``.

    >>> d_invariant(16, 4, 0)
    2
    """
    num = c1_square - (2 * chi + 3 * tau)
    if num % 4:
        raise InputError(
            f"c1^2 - (2 chi + 3 tau) = {num} is not divisible by 4; no Spin^c structure has this data"
        )
    return num // 4


def wu_parity_check(e: int, n: int) -> bool:
    """True iff ``|e| + n`` is even, as it must be for any Spin^c structure."""
    return (abs(e) + n) % 2 == 0


def check_c1_congruence(c1_square: int, tau: int, warn: bool = True) -> bool:
    """``c1^2 == tau (mod 8)`` for a characteristic class; warns instead of raising."""
    ok = (c1_square - tau) % 8 == 0
    if not ok and warn:
        warnings.warn(
            f"c1^2 = {c1_square} is not congruent to tau = {tau} mod 8", CongruenceWarning, stacklevel=2
        )
    return ok


def resolve_d(m: ManifoldData, sp: SpinCData, d_s: Optional[int] = None) -> int:
    """Return d(s), computing it from (c1^2, chi, tau) or cross-checking a given value."""
    computable = None not in (sp.c1_square, m.chi, m.tau)
    if computable:
        d = d_invariant(sp.c1_square, m.chi, m.tau)
        if d_s is not None and d_s != d:
            raise InputError(f"given d_s = {d_s} but c1^2, chi, tau give {d}")
        return d
    if d_s is None:
        raise InputError("d_s missing and cannot be computed without c1_square, chi and tau")
    return d_s


def blow_up(
    m: ManifoldData, s: SurfaceData, sp: SpinCData, d: int, spec: BlowUpSpec
) -> tuple[ManifoldData, SurfaceData, SpinCData, int]:
    """Pass to ``M # r CP2-bar`` with the proper transform ``[Sigma] - E_1 - ... - E_r``.

    Pairing shifts by ``-3r`` (each ``E_i`` pairs to -1 with ``[Sigma] - sum E``
    and ``c1`` gains ``-3 PD[E_i]``), self-intersection by ``-r``, ``d`` by ``-2r``,
    ``c1^2`` by ``-9r``, ``chi`` by ``+r`` and ``tau`` by ``-r``.
    """
    r = spec.r
    if r == 0:
        return m, s, sp, d
    m2 = replace(
        m,
        chi=None if m.chi is None else m.chi + r,
        tau=None if m.tau is None else m.tau - r,
    )
    # the proper transform is a different class, so any embedding matrix no longer applies
    s2 = replace(s, self_int=s.self_int - r, embedding=None)
    sp2 = replace(
        sp,
        pairing_e=sp.pairing_e - 3 * r,
        c1_square=None if sp.c1_square is None else sp.c1_square - 9 * r,
    )
    return m2, s2, sp2, d - 2 * r


def sw_blowup_transfer(sp: SpinCData, spec: BlowUpSpec) -> SpinCData:
    """Transport a basic class to the blow-up; the nonvanishing flag carries over."""
    if not sp.sw_nonvanishing:
        raise HypothesisError(f"{sp.name}: blow-up transfer needs a nonvanishing invariant")
    if spec.r == 0:
        return sp
    return replace(
        sp,
        pairing_e=sp.pairing_e - 3 * spec.r,
        c1_square=None if sp.c1_square is None else sp.c1_square - 9 * spec.r,
        sw_nonvanishing=True,
    )
