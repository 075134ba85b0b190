"""Three exact realizations of affine type A highest weight crystals --
perfect-crystal paths, Young-wall tuples, and quiver-variety kernel data --
with the explicit isomorphisms between them."""

from .cartan import RootVec, Weight, cl_root, decompose, pairing, root, rotate, weight
from .crystal_core import TensorProd, check_axioms, eps_phi_tensor, generate_graph, tensor_apply
from .iso import (
    IsoReport,
    adj_path_from_kernels,
    b1_path_from_kernels,
    bn_path_from_kernels,
    peel_adj,
    peel_p1,
    peel_pn,
    run_pipeline,
)
from .linalg import PRIME, GradedMap, kernel_dim
from .paths import Path, from_word, ground_path, parse_word
from .perfect import (
    AdjElem,
    B1Elem,
    BnElem,
    adj_from_weights,
    b1_from_weight,
    bn_from_weight,
    ground_adj,
    ground_b1,
    ground_bn,
    merge_pair,
    split_adj,
    verify_perfect,
)
from .quiver import KernelTable, commutant_basis, generic_kernel_table, wall_graded_map
from .walls import WallTuple, make_walls, path_to_walls, strip_column0, validate, walls_to_path

__version__ = "0.1.0"
