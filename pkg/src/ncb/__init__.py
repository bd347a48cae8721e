"""Exact enumeration of annular non-crossing partitions of type B."""

from .signed_perm import (
    AnnulusShape,
    SignedPermutation,
    boundary_permutation,
    genus_defect,
    joint_orbit_count,
    kreweras_perm,
)
from .partition import (
    BPartition,
    ClassicalPartition,
    PairStats,
    abs_map,
    adjusted_orbits,
    connectivity,
    kreweras,
    meet_q1,
    pair_stats,
)
from .enumeration import (
    FinitePoset,
    adjusted_orbits_inverse,
    interval_perms,
    nc_a,
    nc_b_annulus,
    nc_b_disc,
    nc_b_multi,
)
from .bijection import (
    AnnulusTuple,
    ParenString,
    annulus_tuples,
    canonical_block_order,
    decode_annulus,
    decode_multichain,
    encode_annulus,
    encode_multichain,
    legal_left_shifts,
    legal_right_shifts,
    read_partition,
)
from .formulas import (
    IntPolynomial,
    annulus_cell_count,
    annulus_connectivity_count,
    annulus_total,
    binom,
    catalan,
    disc_counts,
    max_chains,
    mobius_annulus,
    mobius_q1,
    multi3_total,
    narayana,
    rank_gen,
    rank_gen_compact,
    zeta_poly,
    zeta_poly_q1,
)

__all__ = [
    "AnnulusShape",
    "AnnulusTuple",
    "BPartition",
    "ClassicalPartition",
    "FinitePoset",
    "IntPolynomial",
    "PairStats",
    "ParenString",
    "SignedPermutation",
    "abs_map",
    "adjusted_orbits",
    "adjusted_orbits_inverse",
    "annulus_cell_count",
    "annulus_connectivity_count",
    "annulus_total",
    "annulus_tuples",
    "binom",
    "boundary_permutation",
    "canonical_block_order",
    "catalan",
    "connectivity",
    "decode_annulus",
    "decode_multichain",
    "disc_counts",
    "encode_annulus",
    "encode_multichain",
    "genus_defect",
    "interval_perms",
    "joint_orbit_count",
    "kreweras",
    "kreweras_perm",
    "legal_left_shifts",
    "legal_right_shifts",
    "max_chains",
    "meet_q1",
    "mobius_annulus",
    "mobius_q1",
    "multi3_total",
    "narayana",
    "nc_a",
    "nc_b_annulus",
    "nc_b_disc",
    "nc_b_multi",
    "pair_stats",
    "rank_gen",
    "rank_gen_compact",
    "read_partition",
    "zeta_poly",
    "zeta_poly_q1",
]
