"""Exact linear-extension valuations of posets and Hilbert series of their cones."""

from .errors import (
    CycleError,
    CyclicityError,
    DependenceError,
    DisconnectedError,
    EmbeddingError,
    InputError,
    NotchError,
    NotStronglyPlanarError,
    ParseError,
    PoleError,
    PosetvalError,
    ShapeError,
)
from .poset import (
    VEE,
    WEDGE,
    Circuit,
    Notch,
    PlanarEmbedding,
    Poset,
    Region,
    SkewDiagram,
    antichain,
    biconnected_components,
    bounded_regions,
    chain,
    circuits,
    close_notch,
    connected_order_ideals,
    count_linear_extensions,
    delete_hasse_edges,
    find_notches,
    has_acyclic_hasse,
    is_132_avoiding,
    is_forest,
    lattice_paths,
    linear_extensions,
    order_ideals,
    poset_from_covers,
    poset_from_permutation,
    skew_poset,
)
from .symalg import GeomRat, LinDenRat, LinearForm, Polynomial, QRat, total_residue
from .cones import Cone, in_cone, is_simplicial, lattice_index, root_cone, wt_cone
from .valuations import (
    hilb_complete_intersection,
    hilb_root,
    hilb_strict,
    hilb_wt,
    main_transformation_check,
    notch_identity_check,
    phi_direct,
    phi_forest,
    psi_direct,
    psi_from_blocks,
    psi_planar,
    psi_skew,
    psi_tree,
    psi_unicyclic,
    qhook_check,
)

__version__ = "0.1.0"
