"""Divisorial data of the toric ring K[t, x_i t, x_i x_j t] of a graph."""

from ._core import (
    CanonicalModuleError,
    Graph,
    GraphError,
    InvariantViolation,
    NotNormalError,
    analyze,
    canonical_class,
    class_group,
    complete_bipartite,
    connected_components,
    cycle,
    dominated_odd_cycle_condition,
    facets,
    family,
    height_one_primes,
    induced_odd_cycles,
    is_bipartite,
    is_gorenstein,
    is_normal,
    is_pseudo_gorenstein,
    is_unmixed,
    minimal_vertex_covers,
    normality_gap,
    odd_cycle_condition,
    omega_generators,
    omega_slice,
    path,
    whiskered_cycle,
    whiskered_shape,
)

__all__ = [name for name in dir() if not name.startswith("_")]
