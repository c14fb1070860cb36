"""Local-Clifford invariants and LC-class enumeration for graph states."""

from .graph import (
    Graph,
    GraphError,
    VertexPermutation,
    canonical_form,
    components,
    enumerate_connected_graphs,
    from_edges,
    is_connected,
    local_complement,
)
from .graphio import GraphFormatError, from_graph6, parse_edge_list, parse_inline, to_graph6
from .invariants import (
    CompactInvariant,
    MultiplicitySignature,
    SupportTally,
    TupleSupportSpec,
    WeightDistribution,
    compact_invariant,
    count_r_invariants,
    count_total_invariants,
    multiplicity_signature,
    support_tally,
    t_invariant,
    weight_distribution,
)
from .orbits import (
    ClassDatabase,
    ClassRecord,
    build_class_database,
    classify,
    lc_orbit,
    load_reference,
    read_database,
    recover_paper_numbering,
    write_database,
)
from .stabilizer import GeneratorSet, PauliOperator, element, enumerate_stabilizer, generators, multiply

__version__ = "0.1.0"
