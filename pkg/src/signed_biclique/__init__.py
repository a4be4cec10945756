"""Exact counting of balanced (p, q)-bicliques in signed bipartite graphs."""

from .baseline import count_balanced_baseline
from .bbvp import AnchorContext, build_anchor_context, count_balanced_bbvp, type_tally
from .bbwc import count_balanced_bbwc, type_label, wedge_type
from .counting import COUNT_MAX, binomial, checked_add
from .errors import (
    BicliqueError,
    ConflictingSign,
    CountOverflow,
    CrossSideComparison,
    DuplicateEdge,
    HeaderMismatch,
    InfeasibleEdgeCount,
    InvalidParameter,
    MissingEdge,
    ParseError,
    SizeGuardExceeded,
    TimeLimitExceeded,
)
from .graph import (
    GraphStats,
    Side,
    Sign,
    SignedBipartiteGraph,
    VertexRef,
    build_graph,
    left,
    right,
    select_anchor_side,
)
from .ingest import (
    EPINIONS,
    JESTER,
    BernoulliRandom,
    Format,
    IdMap,
    IngestSpec,
    Native,
    RatingThreshold,
    assign_random_signs,
    binarize_ratings,
    generate_random_bigraph,
    load,
    parse_signed,
    read_canonical,
    write_canonical,
)
from .oracle import (
    Biclique,
    Butterfly,
    biclique_balanced_pairwise,
    biclique_balanced_rank1,
    butterfly_balanced,
    count_all_bruteforce,
    count_balanced_bruteforce,
    enumerate_bicliques,
)
from .report import CountReport, Deadline

__version__ = "0.1.0"
