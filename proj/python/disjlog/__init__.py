"""Disjunctive answer-set solver with weak-constraint optimization.

The heavy lifting happens in the native extension; this package re-exports
its functions. Programs are plain strings in the solver's input syntax and
models come back as lists of literal strings.
"""

from disjlog._core import (
    brave,
    cautious,
    check_answer_set,
    check_syntax,
    classify,
    gen_2qbf,
    gen_graph,
    gen_ramsey,
    gen_samegen,
    gen_stratcomp,
    instantiate,
    oracle_answer_sets,
    solve,
)

__all__ = [
    "brave",
    "cautious",
    "check_answer_set",
    "check_syntax",
    "classify",
    "gen_2qbf",
    "gen_graph",
    "gen_ramsey",
    "gen_samegen",
    "gen_stratcomp",
    "instantiate",
    "oracle_answer_sets",
    "solve",
]
