"""Exact computations for forbidden-subposet problems in the Boolean lattice.

Subpackages cover the lattice primitives (bitmask subsets and canonical
families), finite posets and the complete multilevel family, closed-form
bound formulas in exact rational arithmetic, exhaustive containment search,
extremal lower-bound constructions, maximal-chain partitions, and an exact
small-n solver. The ``subposet`` CLI exposes all of it with deterministic
JSON output.
"""

from .chains import (
    capped_level_coeff,
    count_pairs_enumerated,
    count_pairs_formula,
    enumerate_chains,
    lym_sum,
    min_max_partition,
    min_r_partition,
    minr_maxt_partition,
    pair_bound_check,
    three_per_level_coeff,
)
from .constructions import (
    construct_rst,
    construct_rst_induced,
    construct_rt,
    verify_mod_spread,
)
from .containment import (
    compare,
    contains_any,
    contains_subposet,
    empirical_free_levels,
    interval_has_antichain,
    max_antichain,
    s_minus,
    s_plus,
)
from .formulas import (
    CaseLabel,
    Regime,
    antichain_height,
    classify,
    density_bounds,
    density_bounds_induced,
    induced_free_levels,
    k1s1_pair_coeff,
    middle_height,
    positive_part,
    size_height_bound,
    wide_ends,
)
from .lattice import (
    SetFamily,
    binomial,
    complement_family,
    consecutive_levels,
    largest_mod_classes,
    level,
    modular_classes,
    parse_family,
    serialize_family,
    sigma,
)
from .posets import (
    Poset,
    chain_poset,
    complete_multilevel,
    dual,
    named_poset,
    parse_poset,
    parse_signature,
)
from .solver import certified_lower_bound, la_exact, la_vs_la_star

__version__ = "0.1.0"
