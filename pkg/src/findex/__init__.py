"""F-index of graphs built from four lexicographic-product operations."""

from .closed_forms import THEOREM_FOR_KIND, TheoremId, closed_form, example1_polynomial
from .derived import KINDS, DerivedKind, derive
from .edgelist import parse_edge_list, serialize_edge_list
from .graph import (
    DuplicateEdge,
    EmptyGraph,
    Graph,
    GraphError,
    IndexOutOfRange,
    InvalidFamilyParams,
    SelfLoop,
    build_graph,
    degree,
    gen_family,
    is_connected,
)
from .invariants import (
    InvariantReport,
    f_index,
    general_first_zagreb,
    hyper_zagreb,
    redefined_zagreb,
    report,
    second_zagreb,
)
from .products import ProductVertex, f_product, f_product_subtractive, lexicographic
from .verify import (
    CorpusSpec,
    VerificationRecord,
    enumerate_connected,
    random_connected,
    run_suite,
    verify_pair,
)

__version__ = "0.1.0"
