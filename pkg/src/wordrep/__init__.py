"""Word-representable graphs: alternation words, occurrence-based
rewriting, Cartesian-product constructions, and a brute-force search
oracle for representation numbers."""

from .words import (
    LabelledWord,
    Word,
    alternates,
    check_symbol,
    label,
    parse_words,
    restrict,
    uniformity,
)
from .obf import (
    ChainConditionError,
    OccurrenceBasedFunction,
    apply,
    extend_uniform,
    lemma1_concat,
    obf_from_text,
    obf_to_text,
    projection,
)
from .graphs import (
    Graph,
    NamingConflictError,
    automorphism_orbits,
    cartesian_product,
    complete,
    cube,
    cycle,
    graph_from_edges_text,
    graph_from_json,
    graph_of_word,
    graph_to_edges_text,
    graph_to_json,
    isomorphic,
    load_graph,
    parse_graph,
    represents,
)
from .constructions import (
    ConstructionError,
    complete_word,
    cube_word,
    cycle_word,
    prism_word,
    product_k2_functions,
    product_k2_word,
    product_kn_functions,
    product_kn_word,
)
from .search import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SearchOutcome,
    is_k_representable,
    outcome_to_json,
    representation_number,
)

__all__ = [
    "LabelledWord",
    "Word",
    "alternates",
    "check_symbol",
    "label",
    "parse_words",
    "restrict",
    "uniformity",
    "ChainConditionError",
    "OccurrenceBasedFunction",
    "apply",
    "extend_uniform",
    "lemma1_concat",
    "obf_from_text",
    "obf_to_text",
    "projection",
    "Graph",
    "NamingConflictError",
    "automorphism_orbits",
    "cartesian_product",
    "complete",
    "cube",
    "cycle",
    "graph_from_edges_text",
    "graph_from_json",
    "graph_of_word",
    "graph_to_edges_text",
    "graph_to_json",
    "isomorphic",
    "load_graph",
    "parse_graph",
    "represents",
    "ConstructionError",
    "complete_word",
    "cube_word",
    "cycle_word",
    "prism_word",
    "product_k2_functions",
    "product_k2_word",
    "product_kn_functions",
    "product_kn_word",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "SearchOutcome",
    "is_k_representable",
    "outcome_to_json",
    "representation_number",
]

__version__ = "0.1.0"
