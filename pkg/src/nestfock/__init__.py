"""Exact-arithmetic engine for the loop-algebra Fock module on the
equivariant cohomology of incidence Hilbert schemes of the plane."""

from .basis_change import (
    CacheError,
    LIBRARY_VERSION as __version__,
    TransitionMatrix,
    b1_in_b2,
    b2_in_b1,
    b3_in_b1,
    b3_in_b2,
    cache_load,
    cache_store,
    gram_b3,
    hilb_fixed_in_p,
    hilb_L_in_p,
    transition_matrix,
)
from .curve_classes import add_part, create_b3, nakajima_L, translate_b3
from .fock import (
    B2Key,
    FockVector,
    annihilation,
    b2_keys,
    cotranslate,
    creation,
    loop_action,
    pair_b1,
    pair_b2,
    pair_hilb_fixed,
    pair_hilb_p,
    translate,
)
from .incidence import (
    IncidencePair,
    betti_from_fixed_points,
    betti_series,
    derive_lambda,
    enumerate_incidence_pairs,
    euler_class,
    h_pair,
    h_plus,
    k_index,
    marked_cells,
    tangent_weights_hilbert,
    tangent_weights_incidence,
)
from .partitions import (
    Cell,
    Corner,
    Partition,
    canonical_generators,
    dominance_le,
    enumerate_partitions,
    hook_length,
    hook_product,
    step_length,
    z_factor,
)
from .ring import (
    OrdinaryClass,
    ordinary_cup,
    ordinary_unit,
    pullback_f,
    pullback_g,
    star_b1,
    star_hilb,
    star_tilde,
)
from .symfunc import (
    PolyVKey,
    character,
    induced_product,
    m_in_p,
    p_in_m,
    phi,
    phi_tilde,
    schur_in_p,
)

__all__ = [name for name in dir() if not name.startswith("_")]
