"""dwlab: degreewidth of tournaments.

Exact and approximate degreewidth, sparse-tournament recognition with
certificate orderings, minimum feedback arc set on sparse tournaments,
FPT dominating set, and the two NP-hardness instance generators.
"""

from .approx import BoundsReport, approx_degreewidth, degreewidth_bounds
from .core import (
    BackwardProfile,
    DominationRelation,
    Ordering,
    Tournament,
    backward_arcs,
    backward_profile,
    domination_relation,
    from_arcs,
    has_triangle,
    induced,
    is_acyclic,
    is_dominating_set,
    scc_in_order,
)
from .domset import (
    UniversalFamily,
    fpt_dominating_set,
    greedy_dominating_set,
    lopsided_universal_family,
)
from .errors import (
    DwlabError,
    NotNiceOrderingError,
    NotSparseError,
    SizeCapError,
    TournamentFormatError,
)
from .generators import (
    GeneratorSpec,
    acyclic,
    dominate_join,
    generate,
    random_tournament,
    rotational,
    u_tournament,
)
from .oracles import (
    ExactResult,
    brute_sparse_orderings,
    cutwidth_tournament,
    exact_degreewidth,
    exact_fas,
    exact_fvst,
    exact_min_ds,
)
from .sparse import (
    SparseCertificate,
    UChain,
    canonical_u_ordering,
    eliminate_forbidden_patterns,
    fast_sparse,
    find_forbidden_pattern,
    free_vertex_labels,
    get_u_subtournament,
    is_m_sparse,
    is_uk_m_sparse,
    verify_certificate,
)

__version__ = "0.1.0"
