"""Deciders and verifiable certificates for perfect XOR-game strategies."""

from .decider import (
    AbelianVector,
    DecisionOutcome,
    abelianize_clause_word,
    check_obstruction,
    decide,
    incidence_matrix,
    witness_clause_word,
)
from .games import (
    Clause,
    Game,
    GameFormatError,
    generate_random_game,
    make_game,
    parse_game,
    serialize_json,
    serialize_text,
)
from .graphs import (
    ClauseHypergraph,
    ComponentGame,
    GadgetWord,
    PairGraph,
    build_hypergraph,
    decompose_components,
    gadget_word,
    hyperedge_path,
)
from .intlinalg import (
    IntMatrix,
    Mod2Outcome,
    SmithDecomposition,
    integer_kernel_basis,
    smith_normal_form,
    solve_mod2_over_rationals,
)
from .merp import (
    MerpStrategy,
    StrategyValue,
    analytic_merp_value,
    observables_pairwise_commute,
    simulate_merp_value,
    solve_merp,
    verify_merp_symbolic,
)
from .oracle import (
    ClassicalResult,
    SearchStatus,
    SigmaSearchResult,
    bounded_sigma_search,
    classical_value,
    gf2_satisfiable,
)
from .refutation import (
    Homomorphisms,
    PipelineError,
    RefutationCertificate,
    WordLengthCapExceeded,
    construct_sigma_word,
    decompose_pair_commutators,
    refute,
)
from .words import (
    ClauseWord,
    GroupWord,
    canon_letters,
    canon_word,
    clause_to_word,
    commutator,
    inverse,
    is_parity_trivial,
    multiply,
    project_player,
    project_sigma,
    reduce_clause_word,
    render,
    word_from_letters,
)

__all__ = [name for name in dir() if not name.startswith("_")]
