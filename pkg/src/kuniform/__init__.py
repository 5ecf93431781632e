"""Orthogonal arrays, k-uniform states, and exact certification.

The package builds index-unity orthogonal arrays from finite fields and
Hadamard matrices, maps them to multipartite pure states, verifies
k-uniformity by exact partial-trace computation, and solves for sign
patterns that repair almost-uniform two-level states.
"""

from .errors import (
    BadOrder,
    BadSubset,
    DivisionByZero,
    DuplicateRows,
    EmptyResult,
    FieldMismatch,
    KuniformError,
    LengthMismatch,
    NotAnOAAtStrength,
    NotAPermutation,
    NotNormalized,
    NotPowerOfTwo,
    NotPrimePower,
    OddContributions,
    ParameterMismatch,
    ParameterViolation,
    ParseError,
    PhaseLengthMismatch,
    PhasesPresent,
    ShapeMismatch,
    SymbolOutOfRange,
    Unsupported,
    UnsupportedMultiplicity,
    WrongCount,
)
from .gf import FieldElement, FiniteField, add, elements, field_new, inv, mul
from .linalg import jacobi_eigvalsh, rank_by_eigenvalues
from .oa import (
    BoundReport,
    CeccResult,
    IrredundancyResult,
    IrredundancyWitness,
    OrthogonalArray,
    cecc_singleton_holds,
    derive,
    extend_with_symbol,
    gv_holds,
    is_irredundant,
    is_tight,
    juxtapose,
    max_strength,
    oa_index,
    permute_columns,
    permute_levels,
    permute_rows,
    qecc_singleton_holds,
    rao_min_runs,
    rao_report,
    remove_columns,
    singleton_max_k,
    verify_strength,
)
from .constructions import (
    HadamardMatrix,
    bush_extended_oa,
    bush_oa,
    choose_hadamard_order,
    hadamard,
    hadamard_to_oa,
    hadamard_two_uniform_state,
    kron,
    normalize,
    paley_type1,
    rao_oa,
    sylvester,
)
from .states import (
    DensityMatrix,
    MixednessResult,
    PureState,
    SubsetReport,
    UniformityReport,
    digits_to_word,
    is_maximally_mixed,
    layered_state,
    max_uniformity,
    orbit_state,
    purity,
    reduce,
    reduction_rank,
    state_from_oa,
    uniformity,
    word_to_digits,
)
from .phases import (
    Infeasible,
    SignConstraint,
    SignConstraintSystem,
    SignSolution,
    constraint_system,
    fix_state,
    solve_signs,
)
from .graphs import (
    AdjacencyMatrix,
    BipartiteGraph,
    RuleCheck,
    adjacency,
    check_rules,
    graph_from_json,
    graph_from_state,
    graphs_identical,
    is_k_uniform_by_graphs,
    is_product_across,
    state_from_adjacency,
    to_dot,
    to_json,
)
from .serialize import (
    CatalogDocument,
    parse_catalog,
    parse_ket,
    parse_oa_file,
    write_ket,
    write_oa_file,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "BadOrder",
    "BadSubset",
    "BipartiteGraph",
    "BoundReport",
    "CatalogDocument",
    "CeccResult",
    "DensityMatrix",
    "DivisionByZero",
    "DuplicateRows",
    "EmptyResult",
    "FieldElement",
    "FieldMismatch",
    "FiniteField",
    "HadamardMatrix",
    "Infeasible",
    "IrredundancyResult",
    "IrredundancyWitness",
    "KuniformError",
    "LengthMismatch",
    "MixednessResult",
    "NotAPermutation",
    "NotAnOAAtStrength",
    "NotNormalized",
    "NotPowerOfTwo",
    "NotPrimePower",
    "OddContributions",
    "OrthogonalArray",
    "ParameterMismatch",
    "ParameterViolation",
    "ParseError",
    "PhaseLengthMismatch",
    "PhasesPresent",
    "PureState",
    "RuleCheck",
    "ShapeMismatch",
    "SignConstraint",
    "SignConstraintSystem",
    "SignSolution",
    "SubsetReport",
    "SymbolOutOfRange",
    "UniformityReport",
    "Unsupported",
    "UnsupportedMultiplicity",
    "WrongCount",
    "add",
    "adjacency",
    "bush_extended_oa",
    "bush_oa",
    "cecc_singleton_holds",
    "check_rules",
    "choose_hadamard_order",
    "constraint_system",
    "derive",
    "elements",
    "extend_with_symbol",
    "field_new",
    "fix_state",
    "graph_from_json",
    "graph_from_state",
    "graphs_identical",
    "gv_holds",
    "hadamard",
    "hadamard_to_oa",
    "hadamard_two_uniform_state",
    "inv",
    "is_irredundant",
    "is_k_uniform_by_graphs",
    "is_maximally_mixed",
    "is_product_across",
    "is_tight",
    "jacobi_eigvalsh",
    "juxtapose",
    "kron",
    "layered_state",
    "max_strength",
    "max_uniformity",
    "mul",
    "normalize",
    "oa_index",
    "orbit_state",
    "paley_type1",
    "parse_catalog",
    "parse_ket",
    "parse_oa_file",
    "permute_columns",
    "permute_levels",
    "permute_rows",
    "purity",
    "qecc_singleton_holds",
    "rank_by_eigenvalues",
    "rao_min_runs",
    "rao_oa",
    "rao_report",
    "reduce",
    "digits_to_word",
    "word_to_digits",
    "reduction_rank",
    "remove_columns",
    "singleton_max_k",
    "solve_signs",
    "state_from_adjacency",
    "state_from_oa",
    "sylvester",
    "to_dot",
    "to_json",
    "uniformity",
    "verify_strength",
    "write_ket",
    "write_oa_file",
]
