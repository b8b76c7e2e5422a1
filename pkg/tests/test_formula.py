"""Formula parsing, rendering, and dualization."""

import pytest
from hypothesis import given, settings, strategies as st

from costltl import (
    INF,
    And,
    Atom,
    END,
    Next,
    Or,
    ParseError,
    ReleaseGeq,
    Until,
    UntilLeq,
    dualize,
    is_ltl,
    is_nltl,
    parse,
    render,
    sem_inf,
    sem_sup,
)
from conftest import AB, CORPUS_TEXTS, all_words, corpus


def _formulas(max_depth=4):
    leaves = st.sampled_from([Atom("a"), Atom("b"), END])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(Next, sub),
            st.builds(And, sub, sub),
            st.builds(Or, sub, sub),
            st.builds(Until, sub, sub),
            st.builds(UntilLeq, sub, sub),
        ),
        max_leaves=8,
    )


def test_corpus_parses_and_is_ltl():
    for text, phi in zip(CORPUS_TEXTS, corpus()):
        assert is_ltl(phi), text
        assert not is_nltl(phi) or not any(
            isinstance(s, UntilLeq) for s in _subs(phi)
        ), text


def _subs(phi):
    from costltl.formula import subformulas

    return subformulas(phi)


def test_render_parse_roundtrip_corpus():
    for phi in corpus():
        assert parse(render(phi), AB) == phi


@settings(max_examples=200, deadline=None)
@given(_formulas())
def test_render_parse_roundtrip_random(phi):
    assert parse(render(phi), AB) == phi


def test_parse_rejects_mixed_operators():
    with pytest.raises(ParseError):
        parse("(a U# b) & (a R# b)", AB)


def test_parse_rejects_unknown_atom():
    with pytest.raises(ParseError):
        parse("c U# END", AB)


def test_parse_rejects_trailing_input():
    with pytest.raises(ParseError):
        parse("a b", AB)


def test_derived_forms():
    from costltl.formula import true_formula

    assert parse("F a", AB) == Until(true_formula(AB), Atom("a"))
    assert parse("G a", AB) == Until(Atom("a"), END)
    assert parse("TRUE", AB) == true_formula(AB)


def test_dualize_produces_pure_nltl():
    for phi in corpus():
        assert is_nltl(dualize(phi, AB))


def test_dualize_exact_on_short_words():
    # the dual's sup-semantics matches the inf-semantics exactly, which is
    # stronger than the <= 1 correction the acceptance tolerance requires
    words = all_words(5)
    for phi in corpus()[:12]:
        psi = dualize(phi, AB)
        for u in words:
            assert sem_sup(psi, u) == sem_inf(phi, u), (render(phi), u)


@settings(max_examples=120, deadline=None)
@given(_formulas(), st.text(alphabet="ab", max_size=5))
def test_dualize_within_correction_random(phi, u):
    lo = sem_inf(phi, u)
    hi = sem_sup(dualize(phi, AB), u)
    if lo == INF or hi == INF:
        assert lo == hi
    else:
        assert abs(hi - lo) <= 1
