"""Closed-form complexity, z-invariant, and variety dimensions for gl(m|n) modules.

Everything here is a formula in the atypicality of the highest weight.  No
resolution is computed; the brute-force measurements live in the oracle
subpackage and the two sides are compared in the acceptance tests.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError
from .weights import SuperParams, Weight, atypicality


class ModuleKind(enum.Enum):
    KAC = "kac"
    DUAL_KAC = "dualkac"
    SIMPLE = "simple"


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of a Kac, dual Kac, or simple module of atypicality k.

    dim_rank_plus / dim_rank_minus are the maximal ranks of square-zero odd
    elements of g_{+1} / g_{-1} in the support (equivalently the dimensions of
    the detecting-subalgebra slices); the full rank-variety dimensions in
    g_{+-1} are recovered via ``rank_orbit_closure_dim``.
    """

    complexity: int
    z_invariant: int
    dim_X: int
    dim_V_g_g0: int
    dim_V_f_f0: int
    dim_rank_plus: int
    dim_rank_minus: int

    def __post_init__(self) -> None:
        assert self.complexity == self.dim_X + self.dim_V_g_g0

    def to_json(self) -> dict:
        return {
            "complexity": self.complexity,
            "z_invariant": self.z_invariant,
            "dim_X": self.dim_X,
            "dim_V_g_g0": self.dim_V_g_g0,
            "dim_V_f_f0": self.dim_V_f_f0,
            "dim_rank_plus": self.dim_rank_plus,
            "dim_rank_minus": self.dim_rank_minus,
        }


def rank_orbit_closure_dim(params: SuperParams, r: int) -> int:
    """Dimension (m+n)r - r^2 of the closure of the rank-r orbit in g_{+-1}."""
    if not 0 <= r <= params.n:
        raise DomainError(f"rank {r} out of range 0..{params.n}")
    return (params.m + params.n) * r - r * r


def complexity(kind: ModuleKind, lam: Weight) -> int:
    k = atypicality(lam).atypicality
    base = rank_orbit_closure_dim(lam.params, k)
    return base + k if kind is ModuleKind.SIMPLE else base


def z_invariant(kind: ModuleKind, lam: Weight) -> int:
    k = atypicality(lam).atypicality
    return 2 * k if kind is ModuleKind.SIMPLE else k


def variety_dims(kind: ModuleKind, lam: Weight) -> InvariantReport:
    k = atypicality(lam).atypicality
    dim_x = rank_orbit_closure_dim(lam.params, k)
    dim_v = k if kind is ModuleKind.SIMPLE else 0
    return InvariantReport(
        complexity=dim_x + dim_v,
        z_invariant=z_invariant(kind, lam),
        dim_X=dim_x,
        dim_V_g_g0=dim_v,
        dim_V_f_f0=z_invariant(kind, lam),
        dim_rank_plus=k if kind in (ModuleKind.KAC, ModuleKind.SIMPLE) else 0,
        dim_rank_minus=k if kind in (ModuleKind.DUAL_KAC, ModuleKind.SIMPLE) else 0,
    )
