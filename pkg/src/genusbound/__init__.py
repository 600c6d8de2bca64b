"""Exact symplectic lattice algebra and adjunction-inequality genus bounds.

Modules:

* :mod:`~genusbound.symplattice`: integral symplectic bases and basis changes.
* :mod:`~genusbound.reduction`: gcd descent, the invariant l, constructive witnesses.
* :mod:`~genusbound.swtopology`: 4-manifold and Spin^c bookkeeping, blow-ups.
* :mod:`~genusbound.adjunction`: per-theorem genus bounds and their aggregate.
* :mod:`~genusbound.oracle`: brute-force cross-checks.
* :mod:`~genusbound.casefile` and :mod:`~genusbound.cli`: JSON batch front end.
"""
from .adjunction import AdjunctionCase, BoundReport, TheoremVerdict, best_bound
from .oracle import exhaustive_l, random_symplectic_basis
from .reduction import (
    EmbeddingMap,
    complete_primitive,
    l_invariant,
    l_lower_bound_constructive,
    referee_bound,
    replay,
)
from .swtopology import BlowUpSpec, InsertionData, ManifoldData, SpinCData, SurfaceData, blow_up, d_invariant
from .symplattice import SymplecticBasis, form_eval, lemma21_change, pair_completion, verify_basis

__version__ = "0.1.0"

__all__ = [
    "AdjunctionCase",
    "BlowUpSpec",
    "BoundReport",
    "EmbeddingMap",
    "InsertionData",
    "ManifoldData",
    "SpinCData",
    "SurfaceData",
    "SymplecticBasis",
    "TheoremVerdict",
    "best_bound",
    "blow_up",
    "complete_primitive",
    "d_invariant",
    "exhaustive_l",
    "form_eval",
    "l_invariant",
    "l_lower_bound_constructive",
    "lemma21_change",
    "pair_completion",
    "random_symplectic_basis",
    "referee_bound",
    "replay",
    "verify_basis",
]
