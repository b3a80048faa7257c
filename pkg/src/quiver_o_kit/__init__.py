"""quiver-o-kit: combinatorics of category O for affine type A quiver and hypertoric varieties."""

from .partitions import (
    Abacus,
    AbacusRow,
    ChargedPartition,
    Multipartition,
    Partition,
    RibbonSpec,
    beta_set,
    core_from_column,
    dimension_vector,
    e_core,
    removable_ribbons,
)
from .weights import CylindricalWeight, cartan_matrix, fundamental, root_order_compare
from .crystal import CrystalNode, crystal_graph, epsilon_phi, string_parameterization, tilde_e, tilde_f
from .duality import ChargeMatrix, DualPair, flip, matrix_dual, strata_dual, transpose_weight, weight_dual
from .weightings import Weighting, normalize, u_s_map, uglov, wall_forms
from .strata import cell_partition, dominant_interval, special_strata
from .hypertoric import PolarizedArrangement, gale_dual, is_bounded, is_feasible

__version__ = "0.1.0"
