"""Finite semigroups, their commuting graphs, and exact graph invariants."""

from .commgraph import (
    GraphMetrics,
    LeftPathWitness,
    SimpleGraph,
    chromatic_number,
    clique_number,
    commuting_graph,
    cycle_space_dimension,
    diameter,
    export,
    girth,
    graph_metrics,
    knit_degree,
)
from .constructions import (
    GirthFamilySpec,
    PartialMap,
    ReesMatrixData,
    alternating_group,
    cyclic_group,
    direct_product,
    full_transformation_monoid,
    girth4_band,
    girth_2n_family,
    rees_matrix,
    symmetric_group,
    symmetric_inverse_monoid,
    vagner_preston,
    zero_union,
)
from .enumeration import EnumerationTask, enumerate_semigroups
from .semigroup import (
    FiniteSemigroup,
    SemilatticeDecomposition,
    UnaryInverseMap,
    center,
    idempotents,
    inverse_map,
    inverses_of,
    is_band,
    is_clifford,
    is_commutative,
    is_completely_regular,
    is_completely_simple,
    is_group,
    is_inverse_semigroup,
    is_regular,
    is_simple,
    make_semigroup,
    powers,
    semilattice_decomposition,
)
from .verify import VerificationReport, exhaustive_check

__version__ = "0.1.0"
