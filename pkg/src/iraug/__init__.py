"""Individualization-refinement machinery and random data augmentations.

Core model: :class:`Graph` and :class:`Coloring`. Refinements split
colorings toward equitable ones; search-tree walks individualize vertices
until the coloring is discrete; the augmentation encoders turn walks (or
permutations, or cell indices, or raw noise) into per-vertex feature
blocks; the distinguishing surrogate measures whether an augmentation can
separate graphs that plain refinement cannot.
"""

from .augment import (
    AugmentConfig,
    AugmentationSample,
    Method,
    RniDistribution,
    augmentation_sample,
    clip_features,
    eor_samples,
    irni_features,
    rni_features,
    rp_features,
)
from .datasets import (
    count_triangles,
    gen_circulant,
    gen_complete,
    gen_csl,
    gen_cycle,
    gen_gnp,
    gen_platonic,
    gen_random_regular,
    read_graph,
    write_graph,
)
from .distinguish import (
    CrHistogram,
    cr_histogram,
    distinguish_probability,
    exact_distinguish,
    histogram_distribution,
)
from .errors import (
    BudgetExceededError,
    InternalError,
    InvalidInputError,
    UnsupportedMethodError,
)
from .graphs import (
    Coloring,
    Graph,
    NodeFeatures,
    base_coloring,
    encode_colors,
    subdivide_edge_colors,
)
from .refinement import (
    RefinementKind,
    color_refine,
    cr_then_trivial_refine,
    is_equitable,
    is_finer,
    oblivious_refine,
    refine,
    trivial_refine,
)
from .tree import (
    LeafCertificate,
    SelectorKind,
    TreeNode,
    WalkResult,
    children,
    enumerate_leaves,
    enumerate_tree,
    isomorphic,
    leaf_certificate,
    random_walk,
    select_cell,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentConfig",
    "AugmentationSample",
    "BudgetExceededError",
    "Coloring",
    "CrHistogram",
    "Graph",
    "InternalError",
    "InvalidInputError",
    "LeafCertificate",
    "Method",
    "NodeFeatures",
    "RefinementKind",
    "RniDistribution",
    "SelectorKind",
    "TreeNode",
    "UnsupportedMethodError",
    "WalkResult",
    "augmentation_sample",
    "base_coloring",
    "children",
    "clip_features",
    "color_refine",
    "count_triangles",
    "cr_histogram",
    "cr_then_trivial_refine",
    "distinguish_probability",
    "encode_colors",
    "enumerate_leaves",
    "enumerate_tree",
    "eor_samples",
    "exact_distinguish",
    "gen_circulant",
    "gen_complete",
    "gen_csl",
    "gen_cycle",
    "gen_gnp",
    "gen_platonic",
    "gen_random_regular",
    "histogram_distribution",
    "irni_features",
    "is_equitable",
    "is_finer",
    "isomorphic",
    "leaf_certificate",
    "oblivious_refine",
    "random_walk",
    "read_graph",
    "refine",
    "rni_features",
    "rp_features",
    "select_cell",
    "subdivide_edge_colors",
    "trivial_refine",
    "write_graph",
]
