"""Independence numbers of 2-token graphs."""

from ._core import (
    Error,
    FamilySpec,
    Graph,
    TokenGraph,
    alpha_closed_form,
    alpha_f2,
    build_f2,
    check,
    generate,
    join,
    lemma_check,
    max_independent_set,
    pairs_independent,
    path_union_independent_set,
    read_graph,
)

__all__ = [
    "Error",
    "FamilySpec",
    "Graph",
    "TokenGraph",
    "alpha_closed_form",
    "alpha_f2",
    "build_f2",
    "check",
    "generate",
    "join",
    "lemma_check",
    "max_independent_set",
    "pairs_independent",
    "path_union_independent_set",
    "read_graph",
]
