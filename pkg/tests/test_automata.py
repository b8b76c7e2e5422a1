"""Cost automata: evaluation (cross-checked against explicit run
enumeration), contraction, trimming, and the file format."""

import pytest

from costltl import (
    INF,
    CostAutomaton,
    contract_b,
    dumps_automaton,
    eval_b,
    eval_s,
    eval_s_at_least,
    load_automaton,
    loads_automaton,
    ltl_to_b,
    parse,
    rename_states,
    trim,
    validate,
)
from conftest import AB, all_words, enum_eval, fixture, min_block

FIXTURE_AUTOMATA = [
    "count-letter-b.aut",
    "min-block-b.aut",
    "count-letter-s.aut",
    "blocks-s.aut",
]


@pytest.fixture(scope="module")
def fixture_automata():
    return {name: load_automaton(fixture(name)) for name in FIXTURE_AUTOMATA}


def test_fixtures_validate(fixture_automata):
    for name, aut in fixture_automata.items():
        assert validate(aut) == [], name


def test_count_letter_b_is_exact(fixture_automata):
    aut = fixture_automata["count-letter-b.aut"]
    for u in all_words(7):
        assert eval_b(aut, u) == u.count("a"), u


def test_min_block_b_computes_smallest_block(fixture_automata):
    aut = fixture_automata["min-block-b.aut"]
    for u in all_words(7):
        assert eval_b(aut, u) == min_block(u), u


def test_count_letter_s_within_one(fixture_automata):
    aut = fixture_automata["count-letter-s.aut"]
    for u in all_words(7, min_len=1):
        got = eval_s(aut, u)
        assert u.count("a") - 1 <= got <= u.count("a"), (u, got)


def test_eval_matches_run_enumeration(fixture_automata):
    for name, aut in fixture_automata.items():
        ev = eval_b if aut.kind == "B" else eval_s
        for u in all_words(5):
            assert ev(aut, u) == enum_eval(aut, u), (name, u)


def test_eval_s_at_least_is_threshold_view(fixture_automata):
    aut = fixture_automata["count-letter-s.aut"]
    for u in all_words(5):
        v = eval_s(aut, u)
        for n in range(0, 5):
            assert eval_s_at_least(aut, u, n) == (v >= n), (u, n)


def test_translated_automaton_matches_run_enumeration():
    for text in ["!a U# END", "(b | X a) U# END", "a U# b"]:
        aut = ltl_to_b(parse(text, AB), AB)
        for u in all_words(4):
            assert eval_b(aut, u) == enum_eval(aut, u), (text, u)


def test_contract_bound_and_single_actions():
    phi = parse("(b | X a | X F a) U# END", AB)
    aut = ltl_to_b(phi, AB)
    cut, K = contract_b(aut)
    for _, _, actions, _ in cut.transitions:
        assert all(len(seq) <= 1 for seq in actions)
    for u in all_words(6):
        v, w = eval_b(aut, u), eval_b(cut, u)
        if v == INF or w == INF:
            assert v == w, u
        else:
            assert w <= v <= 2 * K * w + 2 * K, (u, v, w, K)


def test_serialization_roundtrip(fixture_automata):
    for name, aut in fixture_automata.items():
        text = dumps_automaton(aut)
        again = loads_automaton(text)
        assert again == aut, name
        assert dumps_automaton(again) == text, name


def test_serialization_roundtrip_translated():
    aut = rename_states(ltl_to_b(parse("(a | X b) U# (b & X END)", AB), AB))
    assert loads_automaton(dumps_automaton(aut)) == aut


def test_rename_and_trim_preserve_function(fixture_automata):
    for name, aut in fixture_automata.items():
        ev = eval_b if aut.kind == "B" else eval_s
        renamed = rename_states(aut)
        trimmed = trim(aut)
        for u in all_words(4):
            assert ev(renamed, u) == ev(aut, u), (name, "rename", u)
            assert ev(trimmed, u) == ev(aut, u), (name, "trim", u)


def test_validate_rejects_bad_automata(fixture_automata):
    aut = fixture_automata["count-letter-b.aut"]
    import dataclasses

    bad_letter = dataclasses.replace(
        aut, transitions=aut.transitions + (("q0", "c", (("e",),), "q0"),)
    )
    assert validate(bad_letter)
    bad_state = dataclasses.replace(aut, initial=frozenset({"nope"}))
    assert validate(bad_state)
    bad_action = dataclasses.replace(
        aut, transitions=(("q0", "a", (("cr",),), "q0"),) + aut.transitions[1:]
    )
    assert validate(bad_action)


def test_loads_rejects_malformed_input():
    with pytest.raises(ValueError):
        loads_automaton("not a header\n")
    with pytest.raises(ValueError):
        loads_automaton("costltl-format 1\nsemigroup\n")
