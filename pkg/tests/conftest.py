"""Shared corpus, brute-force oracles, and fixture paths for the test suite."""

import itertools
import os

import pytest

from costltl import INF, Alphabet, parse, words_upto

AB = Alphabet("ab")

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


# Quantitative corpus: >= 30 formulae over {a, b}, depth <= 5, at most two U#.
CORPUS_TEXTS = [
    "!a U# END",
    "!b U# END",
    "a U# END",
    "b U# b",
    "(b | X a | X F a) U# END",
    "(a | X a | X F a) U# END",
    "a U# b",
    "b U# a",
    "!a U# a",
    "!b U# (a & X END)",
    "TRUE U# END",
    "FALSE U# END",
    "(a | b) U# END",
    "(a & b) U# END",
    "X (a U# END)",
    "X X (b U# END)",
    "(a U# END) | (b U# END)",
    "(a U# END) & (b U# END)",
    "(!a U# END) | (b U b)",
    "(!a U# END) & F b",
    "a U (b U# END)",
    "(b U# END) U a",
    "F (a & X (b U# END))",
    "G (b | (a U# b))",
    "(X a) U# END",
    "(a | X b) U# (b & X END)",
    "(!a U# END) U# END",
    "b U# (a U b)",
    "(F a) U# END",
    "(a U b) U# END",
    "X (a U# b) | (b U# a)",
    "(!b U# END) & (a U END)",
]


def corpus():
    return [parse(t, AB) for t in CORPUS_TEXTS]


def all_words(max_len, min_len=0):
    return list(words_upto(AB, max_len, min_len))


# ---------------------------------------------------------------------------
# Brute-force automaton evaluation by explicit run enumeration. Exponential in
# the word length; used only on short words to cross-check the threshold
# search in costltl.automata.


def _seq_run(tokens, kind, value, checked):
    for t in tokens:
        if kind == "B":
            if t == "e":
                pass
            elif t == "ic":
                value += 1
                checked.append(value)
            elif t == "r":
                value = 0
            else:
                raise AssertionError(t)
        else:
            if t == "e":
                pass
            elif t == "i":
                value += 1
            elif t == "r":
                value = 0
            elif t == "cr":
                checked.append(value)
                value = 0
            else:
                raise AssertionError(t)
    return value


def _run_value(aut, path_actions):
    values = [0] * aut.counters
    checked = [[] for _ in range(aut.counters)]
    for actions in path_actions:
        for c in range(aut.counters):
            values[c] = _seq_run(actions[c], aut.kind, values[c], checked[c])
    flat = [v for per in checked for v in per]
    if aut.kind == "B":
        return max(flat) if flat else 0
    return min(flat) if flat else INF


def enum_eval(aut, u):
    """inf (B) / sup (S) over all accepting runs, enumerated explicitly."""
    from costltl.automata import _eval_epsilon

    if not u:
        return _eval_epsilon(aut)
    by_src = {}
    for src, letter, actions, dst in aut.transitions:
        by_src.setdefault((src, letter), []).append((actions, dst))
    best = INF if aut.kind == "B" else 0
    found = False
    stack = [(q, 0, ()) for q in aut.initial]
    while stack:
        q, i, path = stack.pop()
        if i == len(u):
            if q in aut.final:
                for exit_actions in aut.exits.get(q, ()):
                    found = True
                    v = _run_value(aut, path + (exit_actions,))
                    best = min(best, v) if aut.kind == "B" else max(best, v)
            continue
        for actions, dst in by_src.get((q, u[i]), ()):
            stack.append((dst, i + 1, path + (actions,)))
    if not found:
        return INF if aut.kind == "B" else 0
    return best


# ---------------------------------------------------------------------------
# Classical-language helpers (membership oracles for counter-free formulae).


def min_block(u):
    """Length of the smallest maximal a-block, empty blocks included."""
    return min(len(p) for p in u.split("b"))


@pytest.fixture(scope="session")
def corpus_formulas():
    return corpus()
