"""Gelfand-Tsetlin realization of simple gl(r) modules with rational matrix entries.

Basis vectors are the interlacing triangular patterns over the highest
weight; the generator action uses the rational (non-orthonormal)
normalization, so every matrix entry is an exact Fraction.  Targets that
leave the pattern lattice are dropped, which is consistent because the
numerators vanish on the boundary in the raising direction and the dropped
lowering terms correspond to the zero vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, ResourceLimitError
from ..ratlinalg import (
    Matrix,
    mat_mul,
    mat_sub,
    sparse_add_scaled,
    sparse_mul,
    to_sparse_cols,
    zeros,
)

GT_MAX_DIM = 10_000
BRACKET_CHECK_MAX_DIM = 400


@dataclass(frozen=True)
class GTPattern:
    """Rows of lengths r, r-1, ..., 1, top row first, consecutive rows interlacing."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.rows)
        for t, row in enumerate(self.rows):
            if len(row) != r - t:
                raise DomainError("rows must have lengths r, r-1, ..., 1")
        for upper, lower in zip(self.rows, self.rows[1:]):
            for i, low in enumerate(lower):
                if not upper[i] >= low >= upper[i + 1]:
                    raise DomainError(f"rows {upper} and {lower} do not interlace")

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0]

    def row_of_length(self, k: int) -> tuple[int, ...]:
        return self.rows[len(self.rows) - k]


def _interlacing_rows(upper: tuple[int, ...]) -> list[tuple[int, ...]]:
    ranges = [range(upper[i + 1], upper[i] + 1) for i in range(len(upper) - 1)]
    return [tuple(vals) for vals in itertools.product(*ranges)]


def gt_patterns(top: tuple[int, ...]) -> list[GTPattern]:
    """All patterns with the given top row, in a fixed deterministic order."""
    top = tuple(top)
    if any(top[i] < top[i + 1] for i in range(len(top) - 1)):
        raise DomainError(f"top row {top} is not weakly decreasing")
    stacks = [(top,)]
    while len(stacks[0][-1]) > 1:
        stacks = [
            stack + (nxt,) for stack in stacks for nxt in _interlacing_rows(stack[-1])
        ]
    return [GTPattern(stack) for stack in stacks]


def weyl_dim_gl(hw: tuple[int, ...]) -> int:
    """Weyl dimension formula for gl(r): prod (l_i - l_j)/(j - i) with l = hw + staircase."""
    r = len(hw)
    value = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            value *= Fraction(hw[i] - hw[j] + j - i, j - i)
    assert value.denominator == 1 and value > 0
    return int(value)


@dataclass(frozen=True)
class GlRep:
    """A simple gl(r) module: pattern basis plus matrices for every unit E_{ij}."""

    r: int
    highest_weight: tuple[int, ...]
    patterns: tuple[GTPattern, ...]
    actions: dict[tuple[int, int], Matrix]

    @property
    def dim(self) -> int:
        return len(self.patterns)

    def check_brackets(self) -> None:
        """[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, exactly, on all unit pairs."""
        cols = {u: to_sparse_cols(m) for u, m in self.actions.items()}
        units = sorted(self.actions)
        for left in units:
            for right in units:
                lhs = sparse_add_scaled(
                    [(sparse_mul(cols[left], cols[right]), 1), (sparse_mul(cols[right], cols[left]), -1)],
                    self.dim,
                )
                expected = []
                if left[1] == right[0]:
                    expected.append((cols[(left[0], right[1])], 1))
                if right[1] == left[0]:
                    expected.append((cols[(right[0], left[1])], -1))
                assert lhs == sparse_add_scaled(expected, self.dim), (left, right)


def _l_value(row: tuple[int, ...], i: int) -> int:
    # shifted entries l_i = lambda_i - i + 1 (strictly decreasing along a row)
    return row[i - 1] - i + 1


def _replace_row(pattern: GTPattern, k: int, new_row: tuple[int, ...]) -> GTPattern | None:
    rows = list(pattern.rows)
    rows[len(rows) - k] = new_row
    try:
        return GTPattern(tuple(rows))
    except DomainError:
        return None


def gl_simple(r: int, highest_weight: tuple[int, ...]) -> GlRep:
    """Simple gl(r) module on GT patterns; raises ResourceLimitError above desk scale."""
    hw = tuple(int(c) for c in highest_weight)
    if len(hw) != r:
        raise DomainError(f"expected {r} coordinates, got {len(hw)}")
    dim = weyl_dim_gl(hw)
    if dim > GT_MAX_DIM:
        raise ResourceLimitError(f"dimension {dim} exceeds {GT_MAX_DIM}")
    patterns = gt_patterns(hw)
    assert len(patterns) == dim
    index = {p: i for i, p in enumerate(patterns)}
    actions: dict[tuple[int, int], Matrix] = {}

    for k in range(1, r + 1):
        mat = zeros(dim, dim)
        for col, p in enumerate(patterns):
            total = sum(p.row_of_length(k))
            if k > 1:
                total -= sum(p.row_of_length(k - 1))
            mat[col][col] = Fraction(total)
        actions[(k, k)] = mat

    for k in range(1, r):
        raise_mat = zeros(dim, dim)
        lower_mat = zeros(dim, dim)
        for col, p in enumerate(patterns):
            row_k = p.row_of_length(k)
            row_up = p.row_of_length(k + 1)
            row_down = p.row_of_length(k - 1) if k > 1 else ()
            for i in range(1, k + 1):
                li = _l_value(row_k, i)
                denom = Fraction(1)
                for j in range(1, k + 1):
                    if j != i:
                        denom *= li - _l_value(row_k, j)
                # E_{k,k+1}: bump entry i up by one
                target = _replace_row(p, k, row_k[: i - 1] + (row_k[i - 1] + 1,) + row_k[i:])
                if target is not None:
                    numer = Fraction(1)
                    for j in range(1, k + 2):
                        numer *= li - _l_value(row_up, j)
                    if numer:
                        raise_mat[index[target]][col] += -numer / denom
                # E_{k+1,k}: bump entry i down by one
                target = _replace_row(p, k, row_k[: i - 1] + (row_k[i - 1] - 1,) + row_k[i:])
                if target is not None:
                    numer = Fraction(1)
                    for j in range(1, k):
                        numer *= li - _l_value(row_down, j)
                    if numer:
                        lower_mat[index[target]][col] += numer / denom
        actions[(k, k + 1)] = raise_mat
        actions[(k + 1, k)] = lower_mat

    # remaining units by bracketing outward from the superdiagonals
    for offset in range(2, r):
        for i in range(1, r - offset + 1):
            j = i + offset
            actions[(i, j)] = mat_sub(
                mat_mul(actions[(i, j - 1)], actions[(j - 1, j)]),
                mat_mul(actions[(j - 1, j)], actions[(i, j - 1)]),
            )
            actions[(j, i)] = mat_sub(
                mat_mul(actions[(j, j - 1)], actions[(j - 1, i)]),
                mat_mul(actions[(j - 1, i)], actions[(j, j - 1)]),
            )
    rep = GlRep(r, hw, tuple(patterns), actions)
    if dim <= BRACKET_CHECK_MAX_DIM:
        rep.check_brackets()
    return rep
