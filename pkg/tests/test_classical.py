"""Classical regular languages as characteristic cost functions, and the
syntactic-semigroup view of minimization.

The oracle here is independent of the library's congruence machinery: it
minimizes the determinized DFA by partition refinement and generates the
transition semigroup of the minimal machine, whose size is the size of the
syntactic semigroup of the language.
"""

import itertools

import pytest

from costltl import (
    INF,
    language_recognizer,
    ltl_to_b,
    parse,
    recognize,
    sem_inf,
    syntactic_quotient,
)
from costltl.classical import determinize, transition_semigroup
from conftest import AB, all_words

# counter-free formulae and their membership predicates
LANGUAGES = [
    ("G b", lambda u: all(c == "b" for c in u)),
    ("F a", lambda u: "a" in u),
    ("a & X (G b)", lambda u: len(u) >= 1 and u[0] == "a"
     and all(c == "b" for c in u[1:])),
]


def _minimal_dfa(aut):
    subsets, start, accepting, delta = determinize(aut)
    n = len(subsets)
    # Moore partition refinement
    block = [0 if i in accepting else 1 for i in range(n)]
    while True:
        sig = {i: (block[i],) + tuple(block[delta[(i, a)]] for a in aut.alphabet)
               for i in range(n)}
        names = {s: j for j, s in enumerate(sorted(set(sig.values())))}
        new = [names[sig[i]] for i in range(n)]
        if new == block:
            break
        block = new
    m = len(set(block))
    d = {(block[i], a): block[delta[(i, a)]] for i in range(n) for a in aut.alphabet}
    return m, block[start], {block[i] for i in accepting}, d, aut.alphabet


def _oracle_syntactic_size(aut):
    m, start, acc, d, alphabet = _minimal_dfa(aut)
    gens = {a: tuple(d[(i, a)] for i in range(m)) for a in alphabet}
    maps = set(gens.values())
    work = list(maps)
    while work:
        t = work.pop()
        for u in list(maps):
            for c in (tuple(u[i] for i in t), tuple(t[i] for i in u)):
                if c not in maps:
                    maps.add(c)
                    work.append(c)
    return len(maps)


@pytest.mark.parametrize("text,member", LANGUAGES, ids=[t for t, _ in LANGUAGES])
def test_characteristic_function_matches_membership(text, member):
    phi = parse(text, AB)
    aut = ltl_to_b(phi, AB)
    assert aut.counters == 0
    for u in all_words(6):
        want = 0 if member(u) else INF
        assert sem_inf(phi, u) == want, u


@pytest.mark.parametrize("text,member", LANGUAGES, ids=[t for t, _ in LANGUAGES])
def test_syntactic_class_count_matches_oracle(text, member):
    aut = ltl_to_b(parse(text, AB), AB)
    rec = language_recognizer(aut)
    q = syntactic_quotient(rec)
    assert len(q.classes) == _oracle_syntactic_size(aut), text


@pytest.mark.parametrize("text,member", LANGUAGES, ids=[t for t, _ in LANGUAGES])
def test_recognizer_decides_membership(text, member):
    aut = ltl_to_b(parse(text, AB), AB)
    rec = language_recognizer(aut)
    for u in all_words(5, min_len=1):
        want = 0 if member(u) else INF
        assert recognize(rec, u) == want, (text, u)


def test_transition_semigroup_rejects_counters():
    aut = ltl_to_b(parse("!a U# END", AB), AB)
    with pytest.raises(ValueError):
        transition_semigroup(aut)
