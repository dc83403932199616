"""Analysis toolkit for partial deterministic finite automata.

Core notions: the rank of a word is the size of the image of the state set
under that word (undefined transitions drop states); the rank of an
automaton is the minimum nonzero rank over all words; a rank-1 word
synchronizes the automaton.  On top of that the package decides saturation
of state sets, recognizes birecurrent languages, and builds the gadget
automata that tie all of these questions to finite-automata intersection.
"""

from .birecurrent import (
    MethodDisagreement,
    SubsetAutomaton,
    determinize_reversal,
    is_birecurrent,
    is_birecurrent_characterization,
    is_birecurrent_direct,
    minimize,
)
from .bruteforce import brute_language, brute_rank, brute_saturating_word
from .core import (
    DEFAULT_BUDGET,
    Acceptor,
    BudgetExceededError,
    PartialDfa,
    SearchBudget,
    StateSet,
    Word,
)
from .gadgets import (
    GadgetLayout,
    IntersectionInstance,
    binarize,
    binarize_with_selfloop,
    build_complete_gadget,
    build_saturation_gadget,
    build_sync_gadget,
    has_common_word,
    strongly_connect_gadget,
)
from .graphs import (
    ComponentGraph,
    PairAutomaton,
    PairNode,
    coreachable_to,
    is_strongly_connected,
    pair_automaton,
    reachable_from,
    scc,
    trim,
)
from .rank import (
    RankResult,
    exact_rank,
    is_synchronizing,
    min_rank_word_sc,
    rank_word_length_bound,
)
from .saturate import (
    SaturationConfig,
    advance,
    find_saturating_min_rank_word,
    initial_config,
    is_saturated_by,
)

__version__ = "0.1.0"

__all__ = [
    "Acceptor",
    "BudgetExceededError",
    "ComponentGraph",
    "DEFAULT_BUDGET",
    "GadgetLayout",
    "IntersectionInstance",
    "MethodDisagreement",
    "PairAutomaton",
    "PairNode",
    "PartialDfa",
    "RankResult",
    "SaturationConfig",
    "SearchBudget",
    "StateSet",
    "SubsetAutomaton",
    "Word",
    "advance",
    "binarize",
    "binarize_with_selfloop",
    "brute_language",
    "brute_rank",
    "brute_saturating_word",
    "build_complete_gadget",
    "build_saturation_gadget",
    "build_sync_gadget",
    "coreachable_to",
    "determinize_reversal",
    "exact_rank",
    "find_saturating_min_rank_word",
    "has_common_word",
    "initial_config",
    "is_birecurrent",
    "is_birecurrent_characterization",
    "is_birecurrent_direct",
    "is_saturated_by",
    "is_strongly_connected",
    "is_synchronizing",
    "min_rank_word_sc",
    "minimize",
    "pair_automaton",
    "rank_word_length_bound",
    "reachable_from",
    "scc",
    "strongly_connect_gadget",
    "trim",
]
