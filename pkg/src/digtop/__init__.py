"""digtop: fundamental groups of digital images.

Finite subsets of the integer lattice carry an adjacency relation; based
loops up to reparametrized homotopy form a group, computed here through
the clique complex and its spanning-tree edge-group presentation, with
bounded certificates (Smith normal form, coset enumeration) answering the
group-theoretic questions and brute-force homotopy search validating the
whole route at desk scale.
"""

from .analysis import GluingAnalysis, ImageAnalysis, analyze_gluing, analyze_image
from .complexes import CliqueComplex, SimpleGraph, max_clique_size, to_dot, two_skeleton
from .constructions import (
    circle,
    diamond,
    digital_interval,
    double_diamond,
    embed_graph,
    is_circle,
    projective_plane,
    realization_complex,
    realize_presentation,
)
from .edgegroups import (
    MoveSpec,
    SpanningTreeData,
    apply_edge_move,
    edge_loop_of,
    loop_to_word,
    phi,
    presentation_of,
    spanning_tree,
)
from .fileio import (
    ParseError,
    parse_image,
    parse_presentation,
    serialize_image,
    serialize_presentation,
)
from .groups import (
    AbelianInvariants,
    CosetResult,
    Presentation,
    abelianization,
    cyclically_reduce,
    disconnected_complements,
    free_product,
    free_reduce,
    inverse_word,
    smith_normal_form,
    svk_pushout,
    tietze_simplify,
    todd_coxeter,
)
from .images import (
    ContractiblePath,
    DigitalImage,
    DigitalPath,
    adjacent,
    adjacent_or_equal,
    concatenate,
    constant_loop,
    is_connected,
    is_contractible_path,
    reverse,
    shorten_path,
    standard_projection_compose,
    trivial_extension,
)
from .oracle import (
    HomotopySearchConfig,
    StateBoundExceeded,
    edge_homotopic_bounded,
    homotopy_classes_fixed_length,
    loops_homotopic_fixed_length,
    subdivision_homotopic,
)
from .twodim import LinkProfile, free_rank, lex_max_point, split_components_at

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
