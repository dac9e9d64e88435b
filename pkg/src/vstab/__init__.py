"""Exact chromatic/clique vertex-stability invariants, extremal construction
generators, and mechanical verification of their claimed parameters."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    Coloring,
    blow_up_cycle5,
    complete_graph,
    delete_vertices,
    disjoint_union,
    is_clique,
    is_clique_partition,
    is_independent,
    is_proper,
    join,
    max_degree,
    parse_dimacs_graph,
    read_dimacs_graph,
    vset,
    vset_list,
    write_dimacs_graph,
    write_dot,
)
from .invariants import (
    Budget,
    BudgetExceededError,
    InvariantSummary,
    chromatic_number,
    clique_number,
    enumerate_maximum_cliques,
    is_k_colorable,
    summarize,
)
from .stability import (
    FBounds,
    StabilityReport,
    f_bounds,
    independent_vertex_stability,
    k_delta,
    reduce_by_color_class,
    stability_report,
    vertex_stability,
)
from .constructions import (
    ConstructionMeta,
    construct_c5blowup,
    construct_constr1,
    construct_prop31,
    expected_invariants_check,
)
from .sat import (
    Clause,
    CnfInstance,
    Literal,
    ValidationResult,
    augmented_independence_graph,
    gen_unsat_family,
    hall_satisfier,
    independence_graph,
    is_satisfiable,
    read_dimacs_cnf,
    removal_set,
    satisfies,
    stability_certificates,
    validate_disjoint_cliques,
    validate_plit_qsat,
    write_dimacs_cnf,
)
from .critical import (
    CriticalityReport,
    critical_union_report,
    enumerate_critical_subgraphs,
    find_critical_subgraph,
    independent_transversal,
    vs_ivs_pipeline,
)
from .verify import (
    SUITE_NAMES,
    VerificationResult,
    run_suite,
)
