"""Bulgarian Solitaire: orbits, level statistics and their limiting generating functions."""
from __future__ import annotations

from .errors import NoFit, ResourceLimitError
from .forest import (
    ForestLevels,
    ForestNode,
    expand_node,
    forest_play,
    forest_roots,
    iter_forest,
    pruned_series,
    to_dot,
    truncated_levels,
)
from .gf import (
    IntPolynomial,
    RationalGF,
    catalog_lookup,
    closed_form_catalog,
    corrected_form,
    gf_equal,
    limit_gf,
    parse_poly,
    poly_add,
    poly_mul,
    poly_sub,
    rational_fit,
    series_expand,
)
from .necklaces import (
    Necklace,
    RecurrentCycle,
    canonicalize,
    color_swap,
    enumerate_necklaces,
    is_primitive,
    necklace_for_partition,
    necklace_params_for_n,
    parse_necklace,
    power,
    primitive_necklaces,
    primitive_root,
    recurrent_cycle,
    recurrent_partitions,
)
from .orbits import (
    LevelPolynomial,
    Orbit,
    build_orbit,
    chebyshev_T_at_2,
    conjecture_ratios,
    decompose,
    forward_oracle,
    level_gf,
    orbit_size_sequence,
)
from .partitions import (
    INVALID,
    DiffLabeling,
    Invalid,
    Partition,
    PlayingSequence,
    apply_sequence,
    bs_forward,
    diff_inverse,
    diff_labeling,
    legal_moves,
    parse_diff_labeling,
    parse_partition,
    partition_count,
    partitions_of,
    reverse_move,
    staircase,
)

__version__ = "0.1.0"
