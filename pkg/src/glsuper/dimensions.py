"""Dimension formulas, partition counts, and Ext-degree bookkeeping.

The Weyl dimension formula is evaluated as a single exact rational product
and asserted to be a positive integer.  The Cauchy decomposition of the
symmetric powers of the dual odd part for gl(k|k) serves as the independent
oracle against the closed-form Hom-space criterion ``kac_ext_trivial``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator

from .errors import DomainError, ParameterError, ResourceLimitError
from .weights import (
    SuperParams,
    Weight,
    bilinear_form,
    bruhat_leq_principal,
    is_principal_block_gl_kk,
    length,
    naive_length,
    positive_roots_m,
    positive_roots_n,
    require_dominant,
    rho_m,
    rho_n,
)

CAUCHY_MAX_K = 4
CAUCHY_MAX_D = 30


@dataclass(frozen=True)
class DimBound:
    """Bracket 2^{dim g_1bar} * dim L0 >= dim P >= dim L0 for a projective cover."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if not 1 <= self.lower <= self.upper:
            raise ParameterError("need 1 <= lower <= upper")

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class ExtDegreeWindow:
    """Admissible Ext degrees d = base + b with b in {0, ..., width = mn}."""

    base: int
    width: int

    def admissible(self, d: int) -> bool:
        return d >= 0 and self.base <= d <= self.base + self.width


def weyl_dim_g0(mu: Weight) -> int:
    """Dimension of the simple gl(m) x gl(n) module with highest weight mu."""
    require_dominant(mu)
    params = mu.params
    shifted_m = mu + rho_m(params)
    shifted_n = mu + rho_n(params)
    value = Fraction(1)
    for root in positive_roots_m(params):
        alpha = root.to_weight(params)
        value *= Fraction(bilinear_form(shifted_m, alpha), bilinear_form(rho_m(params), alpha))
    for root in positive_roots_n(params):
        alpha = root.to_weight(params)
        value *= Fraction(bilinear_form(shifted_n, alpha), bilinear_form(rho_n(params), alpha))
    assert value.denominator == 1 and value > 0, f"Weyl quotient {value} is not a positive integer"
    return int(value)


def projective_dim_bounds(mu: Weight) -> DimBound:
    lower = weyl_dim_g0(mu)
    return DimBound(lower, (1 << (2 * mu.params.m * mu.params.n)) * lower)


def proj_growth_exponent(params: SuperParams, k: int) -> int:
    """Exponent (m+n-k-1)k bounding dimensions of projectives along a resolution."""
    if not 0 <= k <= params.n:
        raise DomainError(f"atypicality {k} out of range 0..{params.n}")
    return (params.m + params.n - k - 1) * k


@cache
def partitions_at_most_k_parts(i: int, k: int) -> int:
    """Number of partitions of i into at most k parts.

    Bottom-up p(j, parts) = p(j, parts-1) + p(j-parts, parts), so the cost is
    O(k*i) and independent of the call order.
    """
    if i < 0 or k < 0:
        raise DomainError("arguments must be nonnegative")
    row = [1] + [0] * i
    for parts in range(1, k + 1):
        for j in range(parts, i + 1):
            row[j] += row[j - parts]
    return row[i]


def iter_partitions_at_most(i: int, k: int) -> Iterator[tuple[int, ...]]:
    """Partitions of i with at most k parts, padded to length k, lexicographic descending."""

    def rec(remaining: int, parts_left: int, bound: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield (0,) * parts_left
            return
        if parts_left == 0:
            return
        top = min(bound, remaining)
        for first in range(top, 0, -1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(i, k, i)


def ext_degree_window(lam: Weight, mu: Weight) -> ExtDegreeWindow:
    require_dominant(lam)
    require_dominant(mu)
    width = lam.params.m * lam.params.n
    return ExtDegreeWindow(naive_length(mu) - naive_length(lam) - width, width)


def ext_degree_constraint(lam: Weight, mu: Weight, d: int) -> bool:
    """Necessary condition -d = |lam| - |mu| + b with b in {0, ..., mn} for Ext^d != 0."""
    if d < 0:
        raise DomainError("degree must be nonnegative")
    b = naive_length(mu) - naive_length(lam) - d
    return 0 <= b <= lam.params.m * lam.params.n


def cauchy_symmetric_decomposition(params: SuperParams, d: int) -> list[Weight]:
    """g0-highest weights of S^d(g_1^*) for gl(k|k), one per partition of d into <= k parts.

    The dual odd part is the tensor of the dual standard with the standard
    module, so the Cauchy identity yields the summand (-tau_k, ..., -tau_1 |
    tau_1, ..., tau_k) with multiplicity one for each such partition tau.
    """
    if params.m != params.n:
        raise DomainError("Cauchy decomposition is implemented for gl(k|k) only")
    k = params.n
    if k > CAUCHY_MAX_K or d > CAUCHY_MAX_D:
        raise ResourceLimitError(f"requested (k={k}, d={d}) beyond (k<={CAUCHY_MAX_K}, d<={CAUCHY_MAX_D})")
    if d < 0:
        raise DomainError("degree must be nonnegative")
    out = []
    for tau in iter_partitions_at_most(d, k):
        first = tuple(-tau[k - 1 - i] for i in range(k))
        out.append(Weight(params, first + tau))
    return out


def cauchy_multiplicity(sigma: Weight, d: int) -> int:
    """Multiplicity of L0(sigma) in S^d(g_1^*); 0 or 1 by the Cauchy identity."""
    return sum(1 for w in cauchy_symmetric_decomposition(sigma.params, d) if w == sigma)


def kac_ext_trivial(sigma: Weight, d: int) -> int:
    """dim Hom_{g0}(L0(sigma), S^d(g_1^*)) for sigma in the principal block of gl(k|k).

    Equals 1 exactly when sigma precedes 0 in the coordinate Bruhat order and
    d = -length(sigma); this is what makes the Ext groups from Kac modules to
    the trivial module one dimensional.
    """
    if d < 0:
        raise DomainError("degree must be nonnegative")
    if not is_principal_block_gl_kk(sigma):
        raise DomainError("sigma must lie in the principal block of a gl(k|k)")
    zero = Weight.zero(sigma.params)
    return int(bruhat_leq_principal(sigma, zero) and d == -length(sigma))
