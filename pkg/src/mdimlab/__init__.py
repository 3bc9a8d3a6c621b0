"""Distance-regular graphs, imprimitivity structure, and exact metric
dimension with verified certificates."""

from .errors import (
    BadParameters,
    BudgetExceeded,
    ClassificationContradiction,
    DegenerateComplement,
    DisconnectedGraph,
    HypothesisFailure,
    InputNotResolving,
    LiftVerificationError,
    MdimlabError,
    NormalizationFailure,
    NoSuchTriple,
    NotAntipodal,
    NotBijection,
    NotBipartite,
    NotBipartiteDiameter3,
    NotDistanceRegular,
    NotNullPolarity,
    NotPrime,
    NotSrgKEquals2c,
    NotTwoAntipodal,
    ParameterFailure,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    IntersectionArray,
    SrgParams,
    bfs_distances,
    distance_i_graph,
    induced_neighborhood,
    intersection_array,
    is_distance_regular,
    is_primitive,
    max_distance_class,
    odd_girth,
)
from .families import (
    LabeledCover,
    bipartite_double,
    family,
    family_names,
    taylor,
)
from .designs import (
    SymmetricDesign,
    design_complement,
    design_dual,
    design_from_graph,
    design_from_text,
    design_text,
    find_null_polarity,
    incidence_graph,
    is_double_blocking,
    is_null_polarity,
    pg2,
    srg_from_null_polarity,
    three_lines_2blocking,
)
from .imprimitivity import (
    AHClass,
    AntipodalStructure,
    antipodal_structure,
    bipartition,
    classify_ah,
    fold,
    halve,
    is_antipodal,
)
from .cover import (
    CoverResult,
    PairCoverInstance,
    build_instance,
    greedy_cover,
    min_cover,
)
from .mdim import (
    BoundReport,
    ResolvingCertificate,
    SplitDimension,
    babai_bounds,
    certify,
    default_budget,
    exhaustive_mdim,
    first_unresolved_pair,
    first_unseparated_pair,
    is_resolving,
    is_semi_resolving_for_blocks,
    lower_bound_nd,
    mdim_exact,
    mdim_greedy,
    min_semi_resolving,
    pair_cover_instance,
    resolving_witness_map,
    semi_cover_instance,
    split_mdim,
    twin_classes,
    twin_forced_choices,
)
from .lifting import (
    FoldedLift,
    descendant_extract,
    double_lift,
    lift_folded,
    lift_halved,
    project_to_folded,
    push_to_plus,
    taylor_lift,
    two_antipodal_partition,
)
from .io import graph_dot, graph_from_text, graph_text, read_graph, write_graph

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
