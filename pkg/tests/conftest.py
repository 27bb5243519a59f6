"""Shared helpers and hypothesis strategies for the test suite."""

from __future__ import annotations

from itertools import product

from hypothesis import settings, strategies as st

from lpsem import Atom, Clause, GroundProgram, PartialInterpretation, ground, parse_program

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def gp(text: str) -> GroundProgram:
    """Parse and ground a program given as source text."""
    return ground(parse_program(text))


def fs(*names: str) -> frozenset[Atom]:
    return frozenset(Atom(n) for n in names)


def pi(pos: str = "", neg: str = "") -> PartialInterpretation:
    """Partial interpretation from space-separated atom names."""
    return PartialInterpretation(fs(*pos.split()), fs(*neg.split()))


def interps_below(bound: PartialInterpretation, base) -> list[PartialInterpretation]:
    """All partial interpretations below ``bound`` in the knowledge order."""
    atoms = sorted(base, key=str)
    choices = []
    for a in atoms:
        if a in bound.pos:
            choices.append((None, True))
        elif a in bound.neg:
            choices.append((None, False))
        else:
            choices.append((None,))
    out = []
    for signs in product(*choices):
        pos = frozenset(a for a, s in zip(atoms, signs) if s is True)
        neg = frozenset(a for a, s in zip(atoms, signs) if s is False)
        out.append(PartialInterpretation(pos, neg))
    return out


@st.composite
def programs(draw, max_atoms: int = 5, max_clauses: int = 8, definite: bool = False):
    """Random ground propositional programs over atoms a..e."""
    n = draw(st.integers(1, max_atoms))
    universe = [Atom(c) for c in "abcdefgh"[:n]]
    clause_count = draw(st.integers(0, max_clauses))
    clauses = []
    for _ in range(clause_count):
        head = draw(st.sampled_from(universe))
        pos: list[Atom] = []
        neg: list[Atom] = []
        for _ in range(draw(st.integers(0, 3))):
            atom = draw(st.sampled_from(universe))
            negate = False if definite else draw(st.booleans())
            bucket = neg if negate else pos
            if atom not in bucket:
                bucket.append(atom)
        clauses.append(Clause(head, tuple(pos), tuple(neg)))
    return GroundProgram(frozenset(clauses), frozenset(universe))


@st.composite
def interpretations(draw, base):
    atoms = sorted(base, key=str)
    pos, neg = [], []
    for a in atoms:
        sign = draw(st.sampled_from((None, True, False)))
        if sign is True:
            pos.append(a)
        elif sign is False:
            neg.append(a)
    return PartialInterpretation(frozenset(pos), frozenset(neg))


@st.composite
def program_with_interpretation(draw, max_atoms: int = 5, max_clauses: int = 8):
    g = draw(programs(max_atoms, max_clauses))
    return g, draw(interpretations(g.base))


@st.composite
def program_with_ordered_pair(draw, max_atoms: int = 5, max_clauses: int = 8):
    """Program plus interpretations i <= j in the knowledge order."""
    g = draw(programs(max_atoms, max_clauses))
    atoms = sorted(g.base, key=str)
    i_pos, i_neg, j_pos, j_neg = [], [], [], []
    states = ((None, None), (None, True), (None, False), (True, True), (False, False))
    for a in atoms:
        vi, vj = draw(st.sampled_from(states))
        if vi is True:
            i_pos.append(a)
        elif vi is False:
            i_neg.append(a)
        if vj is True:
            j_pos.append(a)
        elif vj is False:
            j_neg.append(a)
    return (
        g,
        PartialInterpretation(frozenset(i_pos), frozenset(i_neg)),
        PartialInterpretation(frozenset(j_pos), frozenset(j_neg)),
    )
