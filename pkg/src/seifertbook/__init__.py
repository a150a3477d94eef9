"""Horizontal open books, plumbing normalization and exact homology checks
for Seifert fibered 3-manifolds with invariants (g, n; r_1, ..., r_k)."""

from .errors import IneligibleError, MoveError, RewriteError, SchemaError, TopologyError
from .homology import AbelianGroup, IntegerMatrix, determinant, first_homology, smith_normal_form
from .openbook import (
    Classification,
    OpenBook,
    SurgeryPresentation,
    classify_boundary_word,
    construct_horizontal_open_book,
    contact_fiber_pairing,
    gluing_matrix,
    positive_stabilization,
    seifert_from_boundary_word,
    surgery_presentation,
)
from .plumbing import (
    Move,
    Normalization,
    PlumbingGraph,
    Vertex,
    blow_down,
    blow_up_edge,
    branch_continued_fraction,
    is_nonpositive_standard,
    linking_matrix,
    normalize_to_standard,
    rational_euler_from_graph,
    star_from_seifert,
)
from .seifert import SeifertInvariants, canonicalize, rational_euler, validate_eligible
from .twistword import LanternConfig, TwistWord, lantern_rewrite, word_exponent_vector

__version__ = "0.1.0"
