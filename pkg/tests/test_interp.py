"""Interpretation and truth-evaluation tests."""

import json

import pytest
from hypothesis import given

from conftest import fs, gp, pi, program_with_interpretation, programs
from lpsem import (
    Atom,
    InconsistencyError,
    Literal,
    OutOfBaseError,
    PartialInterpretation,
    TruthValue,
    interpretation_json,
    is_model,
    is_total,
    knowledge_leq,
    make_partial,
    parse_atom,
    total_extension,
    tp_plus,
    truth_of_body,
    truth_of_literal,
)

M1 = pi("p", "q")
M2 = pi("q", "p")


def test_make_partial_accepts_consistent():
    m = make_partial(fs("p"), fs("q"), fs("p", "q"))
    assert m == M1


def test_make_partial_empty():
    assert make_partial((), (), fs("p", "q")) == PartialInterpretation()


def test_make_partial_rejects_inconsistency():
    with pytest.raises(InconsistencyError) as exc:
        make_partial(fs("p"), fs("p"), fs("p"))
    assert exc.value.witness == Atom("p")


def test_make_partial_rejects_out_of_base():
    with pytest.raises(OutOfBaseError) as exc:
        make_partial(fs("p"), fs("q"), fs("p"))
    assert exc.value.witness == Atom("q")


def test_direct_construction_guards_consistency():
    with pytest.raises(InconsistencyError):
        PartialInterpretation(fs("p"), fs("p"))


def test_truth_of_literal():
    assert truth_of_literal(M1, Literal(Atom("q"), negated=True)) is TruthValue.TRUE
    assert truth_of_literal(pi(), Literal(Atom("p"))) is TruthValue.UNDEFINED
    assert truth_of_literal(M2, Literal(Atom("p"))) is TruthValue.FALSE
    assert truth_of_literal(M2, Literal(Atom("p"), negated=True)) is TruthValue.TRUE


def test_truth_of_body():
    not_p = Literal(Atom("p"), negated=True)
    assert truth_of_body(M2, (not_p,)) is TruthValue.TRUE
    assert truth_of_body(pi(), ()) is TruthValue.TRUE
    assert truth_of_body(pi("p"), (Literal(Atom("p")), Literal(Atom("q"), negated=True))) \
        is TruthValue.UNDEFINED
    assert truth_of_body(M1, (Literal(Atom("q")), Literal(Atom("p")))) is TruthValue.FALSE


@given(program_with_interpretation())
def test_body_truth_values_mutually_exclusive(gi):
    g, i = gi
    for clause in g.clauses:
        body = clause.body_literals()
        value = truth_of_body(i, body)
        all_true = all(truth_of_literal(i, lit) is TruthValue.TRUE for lit in body)
        some_false = any(truth_of_literal(i, lit) is TruthValue.FALSE for lit in body)
        assert (value is TruthValue.TRUE) == all_true
        assert (value is TruthValue.FALSE) == some_false
        assert not (all_true and some_false)


def test_is_model_on_total_models():
    g = gp("q :- not p.\np :- p.")
    assert is_model(g, M1)
    assert is_model(g, M2)
    assert not is_model(g, pi("", "p"))  # q's body holds but q is not true


def test_is_model_vacuous_body():
    assert is_model(gp("p :- p."), pi())


@given(programs(max_atoms=4))
def test_is_model_of_total_extension_matches_classical(g):
    # classical models are exactly the prefixed points of the total-reading operator
    atoms = sorted(g.base, key=str)
    for mask in range(2 ** len(atoms)):
        m = frozenset(a for k, a in enumerate(atoms) if mask >> k & 1)
        assert is_model(g, total_extension(m, g.base)) == (tp_plus(g, m) <= m)


def test_total_extension():
    assert total_extension(fs("p"), fs("p", "q")) == M1
    assert total_extension(frozenset(), fs("p")) == pi("", "p")
    assert total_extension(fs("p", "q"), fs("p", "q")) == pi("p q")


@given(program_with_interpretation())
def test_total_extension_is_maximal(gi):
    g, i = gi
    total = total_extension(i.pos, g.base)
    if knowledge_leq(total, i):
        assert i == total


def test_knowledge_leq():
    assert knowledge_leq(pi(), M1)
    assert not knowledge_leq(M1, M2)
    assert not knowledge_leq(M2, M1)
    assert knowledge_leq(M1, M1)


def test_is_total():
    assert is_total(M1, fs("p", "q"))
    assert not is_total(pi(), fs("p"))
    assert is_total(pi("", "p"), fs("p"))


def test_interpretation_json_shape():
    doc = interpretation_json(pi("b", "a"), fs("a", "b", "c"))
    assert doc == {"true": ["b"], "false": ["a"], "undefined": ["c"]}


@given(program_with_interpretation())
def test_interpretation_json_roundtrip(gi):
    g, i = gi
    doc = json.loads(json.dumps(interpretation_json(i, g.base)))
    rebuilt = PartialInterpretation(
        frozenset(parse_atom(s) for s in doc["true"]),
        frozenset(parse_atom(s) for s in doc["false"]),
    )
    assert rebuilt == i
    assert interpretation_json(rebuilt, g.base) == doc
