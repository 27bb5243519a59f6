"""Named semantics tests: frozen examples plus cross-construction properties."""

import pytest
from hypothesis import given

from conftest import fs, gp, pi, programs
from lpsem import (
    CapExceededError,
    GroundProgram,
    NotDefiniteError,
    compute_semantics,
    fitting_model,
    fitting_trace,
    greatest_model,
    is_locally_stratified,
    is_maxstable,
    is_stable,
    is_supported,
    knowledge_leq,
    least_model,
    maxstable_models,
    maxwf_alternating,
    maxwf_model,
    stable_models,
    supported_models,
    total_extension,
    well_founded_model,
    wf_alternating,
)
from lpsem.gen import random_program
from lpsem.syntax import ground

EX = gp("q :- not p.\np :- p.")
CHOICE = gp("p :- not q.\nq :- not p.")


def test_least_model():
    assert least_model(gp("a.\nb :- a.\nc :- c.")) == fs("a", "b")
    assert least_model(gp("p :- p.")) == frozenset()
    assert least_model(gp("")) == frozenset()


def test_greatest_model():
    assert greatest_model(gp("a.\nb :- a.\nc :- c.")) == fs("a", "b", "c")
    assert greatest_model(gp("p :- q.")) == frozenset()
    assert greatest_model(gp("")) == frozenset()


def test_least_greatest_require_definite():
    with pytest.raises(NotDefiniteError):
        least_model(EX)
    with pytest.raises(NotDefiniteError):
        greatest_model(EX)


def test_fitting_model():
    assert fitting_model(EX) == pi()
    assert fitting_model(gp("p :- not p, q.")) == pi("", "p q")
    assert fitting_model(gp("p :- p.")) == pi()


def test_well_founded_model():
    assert well_founded_model(EX) == pi("q", "p")
    assert well_founded_model(gp("p :- p.")) == pi("", "p")
    assert well_founded_model(CHOICE) == pi()


def test_wf_alternating():
    pair, model = wf_alternating(EX)
    assert (pair.lfp_sq, pair.gfp_sq) == (fs("q"), fs("q"))
    assert model == pi("q", "p")

    pair, model = wf_alternating(CHOICE)
    assert (pair.lfp_sq, pair.gfp_sq) == (frozenset(), fs("p", "q"))
    assert model == pi()

    pair, model = wf_alternating(gp("a."))
    assert (pair.lfp_sq, pair.gfp_sq) == (fs("a"), fs("a"))
    assert model == pi("a")


def test_maxwf_model():
    assert maxwf_model(EX) == pi("p", "q")
    assert maxwf_model(gp("p :- p.")) == pi("p")
    assert maxwf_model(CHOICE) == pi()


def test_maxwf_alternating():
    pair, model = maxwf_alternating(EX)
    assert (pair.lfp_sq, pair.gfp_sq) == (fs("p"), fs("p"))
    assert model == pi("p", "q")

    pair, model = maxwf_alternating(gp("p :- p."))
    assert (pair.lfp_sq, pair.gfp_sq) == (fs("p"), fs("p"))
    assert model == pi("p")

    pair, model = maxwf_alternating(gp("p :- q."))
    assert (pair.lfp_sq, pair.gfp_sq) == (frozenset(), frozenset())
    assert model == pi("", "p q")


def test_stable_models():
    assert stable_models(EX) == (fs("q"),)
    assert stable_models(gp("p :- not p.")) == ()
    assert stable_models(CHOICE) == (fs("p"), fs("q"))


def test_maxstable_models():
    assert maxstable_models(EX) == (fs("p"),)
    assert maxstable_models(gp("p :- p.")) == (fs("p"),)
    assert maxstable_models(CHOICE) == (fs("p"), fs("q"))


def test_supported_models():
    assert supported_models(gp("p :- p.")) == (frozenset(), fs("p"))
    assert supported_models(EX) == (fs("p"), fs("q"))
    assert supported_models(GroundProgram(frozenset(), fs("p"))) == (frozenset(),)


def test_membership_predicates():
    assert is_stable(EX, fs("q"))
    assert not is_stable(EX, fs("p"))
    assert is_maxstable(EX, fs("p"))
    assert not is_maxstable(EX, fs("q"))
    assert is_supported(gp("p :- p."), fs("p"))
    assert is_supported(gp(""), frozenset())
    assert not is_supported(EX, fs("p", "q"))


def test_enumeration_cap():
    many = GroundProgram(frozenset(), fs(*(f"x{i:03d}" for i in range(21))))
    for enumerate_models in (stable_models, maxstable_models, supported_models):
        with pytest.raises(CapExceededError):
            enumerate_models(many)
    # a raised cap admits larger bases
    assert isinstance(stable_models(ground(random_program(8, 12, seed=1)), cap=10), tuple)


def test_enumeration_order_is_lexicographic():
    models = maxstable_models(CHOICE)
    assert [sorted(map(str, m)) for m in models] == [["p"], ["q"]]


@given(programs())
def test_wf_equals_alternating(g):
    assert well_founded_model(g) == wf_alternating(g)[1]


@given(programs())
def test_maxwf_equals_alternating(g):
    assert maxwf_model(g) == maxwf_alternating(g)[1]


@given(programs(max_atoms=4))
def test_stable_and_maxstable_are_supported(g):
    supported = set(supported_models(g))
    assert set(stable_models(g)) <= supported
    assert set(maxstable_models(g)) <= supported


@given(programs(max_atoms=4))
def test_enumerated_sets_bracketed_by_alternating_pairs(g):
    pair, _ = wf_alternating(g)
    for m in stable_models(g):
        assert pair.lfp_sq <= m <= pair.gfp_sq
    cpair, _ = maxwf_alternating(g)
    for m in maxstable_models(g):
        assert cpair.lfp_sq <= m <= cpair.gfp_sq


@given(programs(definite=True))
def test_definite_duality(g):
    assert stable_models(g) == (least_model(g),)
    assert maxstable_models(g) == (greatest_model(g),)


@given(programs())
def test_fitting_below_wf_and_maxwf(g):
    fit = fitting_model(g)
    assert knowledge_leq(fit, well_founded_model(g))
    assert knowledge_leq(fit, maxwf_model(g))


@pytest.mark.parametrize("seed", range(20))
def test_total_wf_gives_unique_stable_model(seed):
    g = ground(random_program(5, 8, seed=seed, neg_prob=0.5, stratified=True))
    assert is_locally_stratified(g)
    wf = well_founded_model(g)
    assert wf.decided == g.base
    assert stable_models(g) == (wf.pos,)


def test_traces_attached():
    trace = fitting_trace(EX)
    assert trace.fixpoint == fitting_model(EX)
    assert trace.stages[0] == pi()


def test_compute_semantics_dispatch():
    assert compute_semantics(EX, "wf").model == pi("q", "p")
    assert compute_semantics(EX, "wf").total is True
    assert compute_semantics(EX, "fitting").total is False
    assert compute_semantics(EX, "stable").model == (fs("q"),)
    alt = compute_semantics(EX, "maxwf-alt")
    assert alt.pair is not None and alt.model == pi("p", "q")
    definite = gp("a.\nb :- a.")
    assert compute_semantics(definite, "least").model == total_extension(
        fs("a", "b"), definite.base
    )
    with pytest.raises(ValueError):
        compute_semantics(EX, "mystery")
