"""Quantitative LTL over finite words: cost semantics, compilation to B- and
S-cost-automata, boundedness decisions, and stabilization-semigroup algebra
with syntactic minimization."""

from .core import INF, Alphabet, words_upto, count_letter
from .formula import (
    Atom,
    End,
    END,
    And,
    Or,
    Next,
    Until,
    UntilLeq,
    ReleaseGeq,
    parse,
    render,
    dualize,
    is_ltl,
    is_nltl,
    ParseError,
)
from .semantics import models, sem_inf, sem_sup
from .automata import (
    CostAutomaton,
    eval_b,
    eval_s,
    eval_s_at_least,
    contract_b,
    trim,
    rename_states,
    validate,
    load_automaton,
    save_automaton,
    loads_automaton,
    dumps_automaton,
)
from .translate import ltl_to_b, nltl_to_s
from .semigroup import (
    StabSemigroup,
    Recognizer,
    make_semigroup,
    validate_axioms,
    idempotent_power,
    achievable_values,
    recognize,
    parse_expr,
    render_expr,
    eval_expr,
    instantiate,
    classify,
    load_semigroup,
    save_semigroup,
    loads_semigroup,
    dumps_semigroup,
)
from .minimize import (
    context_closure,
    syntactic_quotient,
    is_aperiodic,
    is_ltl_definable,
)
from .bounded import (
    BoundednessResult,
    bounded_onthefly,
    bounded_closure,
    run_semigroup_closure,
    bounded_formula,
    is_bounded,
    witness_word,
)
from .classical import language_recognizer, transition_semigroup

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Alphabet",
    "words_upto",
    "count_letter",
    "Atom",
    "End",
    "END",
    "And",
    "Or",
    "Next",
    "Until",
    "UntilLeq",
    "ReleaseGeq",
    "parse",
    "render",
    "dualize",
    "is_ltl",
    "is_nltl",
    "ParseError",
    "models",
    "sem_inf",
    "sem_sup",
    "CostAutomaton",
    "eval_b",
    "eval_s",
    "eval_s_at_least",
    "contract_b",
    "trim",
    "rename_states",
    "validate",
    "load_automaton",
    "save_automaton",
    "loads_automaton",
    "dumps_automaton",
    "ltl_to_b",
    "nltl_to_s",
    "StabSemigroup",
    "Recognizer",
    "make_semigroup",
    "validate_axioms",
    "idempotent_power",
    "achievable_values",
    "recognize",
    "parse_expr",
    "render_expr",
    "eval_expr",
    "instantiate",
    "classify",
    "load_semigroup",
    "save_semigroup",
    "loads_semigroup",
    "dumps_semigroup",
    "context_closure",
    "syntactic_quotient",
    "is_aperiodic",
    "is_ltl_definable",
    "BoundednessResult",
    "bounded_onthefly",
    "bounded_closure",
    "run_semigroup_closure",
    "bounded_formula",
    "is_bounded",
    "witness_word",
    "language_recognizer",
    "transition_semigroup",
    "__version__",
]
