"""Exact block combinatorics, complexity formulas, and module oracles for gl(m|n)."""

from .weights import (
    BlockDescriptor,
    Root,
    SuperParams,
    Weight,
    atypicality,
    berezinian_weight,
    bilinear_form,
    bruhat_leq_principal,
    is_dominant,
    length,
    naive_length,
    rho,
    rho_m,
    rho_n,
    root_partition,
    same_block,
)
from .dimensions import (
    DimBound,
    ExtDegreeWindow,
    cauchy_symmetric_decomposition,
    ext_degree_constraint,
    kac_ext_trivial,
    partitions_at_most_k_parts,
    proj_growth_exponent,
    projective_dim_bounds,
    weyl_dim_g0,
)
from .invariants import (
    InvariantReport,
    ModuleKind,
    complexity,
    rank_orbit_closure_dim,
    variety_dims,
    z_invariant,
)
from .polytope import (
    QuasiPolynomial,
    RationalPolytope,
    build_polytope,
    count_lattice_points,
    enumerate_lattice_points,
    fit_quasipolynomial,
    interior_witness,
    k1_degenerate_point,
    lower_bound_poly,
)
from .suzhang import (
    WeightPairSet,
    ZetaInput,
    block_B_descriptor,
    build_S,
    check_pair_conditions,
    mu_a,
    nu,
    phi_k1,
    phi_on_zeta,
    zeta,
)

__version__ = "0.1.0"
