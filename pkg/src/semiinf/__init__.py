"""Exact fiber computations for the semi-infinite IC sheaf on the affine Grassmannian."""

__version__ = "0.1.0"

from .characters import (
    Character,
    dual_character,
    irr_character,
    stable_tensor_check,
    tensor_decompose,
    weight_multiplicity,
    weyl_dimension,
)
from .fibers import (
    LambdaChain,
    default_chain,
    fiber_table,
    heart_character_check,
    shriek_fiber_approximant,
    shriek_fiber_stable,
    star_fiber_approximant,
    star_fiber_stable,
)
from .plucker import gn_bar_summands, hecke_structure_check, plucker_hom_character, verify_as_colim
from .qgradings import (
    chevalley_graded,
    delta0_shriek_fiber,
    lusztig_q_analog,
    oN_weight_dim,
    q_kostant,
    sym_gmodb_graded,
    sym_nminus_graded,
)
from .qpoly import QPolynomial
from .rootdatum import (
    CartanMatrix,
    RootDatum,
    build_root_datum,
    cartan_from_type,
    datum_for,
    dot_action,
    in_pos_cone,
    leq_nonstandard,
    pairing_2rho,
    weyl_group,
)
