"""Two- and three-valued interpretations and truth evaluation.

A partial interpretation stores the atoms known true (``pos``) and known
false (``neg``); everything else is undefined.  Interpretations do not carry
a reference to their base: operations that need the base take it explicitly,
which lets the same interpretation be evaluated against reducts sharing its
atoms.  Two-valued interpretations are plain frozensets of atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .syntax import Atom, GroundProgram, Literal

# A two-valued interpretation is just a subset of the base.
TwoValued = frozenset[Atom]


class TruthValue(Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


class InterpretationError(ValueError):
    pass


class InconsistencyError(InterpretationError):
    """An atom was asserted both true and false."""

    def __init__(self, witness: Atom):
        super().__init__(f"inconsistent interpretation: {witness} is both true and false")
        self.witness = witness


class OutOfBaseError(InterpretationError):
    def __init__(self, witness: Atom):
        super().__init__(f"atom {witness} is not in the base")
        self.witness = witness


@dataclass(frozen=True)
class PartialInterpretation:
    """A consistent set of ground literals, split into positive and negative parts."""

    pos: frozenset[Atom] = frozenset()
    neg: frozenset[Atom] = frozenset()

    def __post_init__(self) -> None:
        overlap = self.pos & self.neg
        if overlap:
            raise InconsistencyError(min(overlap, key=str))

    @property
    def decided(self) -> frozenset[Atom]:
        return self.pos | self.neg

    def __str__(self) -> str:
        parts = sorted(str(a) for a in self.pos)
        parts += sorted(f"¬{a}" for a in sorted(self.neg, key=str))
        return "{" + ", ".join(parts) + "}"


EMPTY_INTERPRETATION = PartialInterpretation()


def make_partial(
    pos: Iterable[Atom], neg: Iterable[Atom], base: Iterable[Atom]
) -> PartialInterpretation:
    """Validated constructor: checks consistency and containment in the base."""
    pos, neg, base = frozenset(pos), frozenset(neg), frozenset(base)
    out = (pos | neg) - base
    if out:
        raise OutOfBaseError(min(out, key=str))
    return PartialInterpretation(pos, neg)


def truth_of_literal(i: PartialInterpretation, lit: Literal) -> TruthValue:
    if lit.atom in i.pos:
        return TruthValue.FALSE if lit.negated else TruthValue.TRUE
    if lit.atom in i.neg:
        return TruthValue.TRUE if lit.negated else TruthValue.FALSE
    return TruthValue.UNDEFINED


def truth_of_body(i: PartialInterpretation, body: Iterable[Literal]) -> TruthValue:
    """Three-valued conjunction; the empty body is true."""
    value = TruthValue.TRUE
    for lit in body:
        v = truth_of_literal(i, lit)
        if v is TruthValue.FALSE:
            return TruthValue.FALSE
        if v is TruthValue.UNDEFINED:
            value = TruthValue.UNDEFINED
    return value


def is_model(g: GroundProgram, i: PartialInterpretation) -> bool:
    """Every clause whose body literals are all members of ``i`` has a true head."""
    for clause in g.clauses:
        body_holds = all(a in i.pos for a in clause.pos_body) and all(
            b in i.neg for b in clause.neg_body
        )
        if body_holds and clause.head not in i.pos:
            return False
    return True


def total_extension(m: TwoValued, base: Iterable[Atom]) -> PartialInterpretation:
    """Identify a two-valued interpretation with the total partial one over base."""
    base = frozenset(base)
    m = frozenset(m)
    return PartialInterpretation(m, base - m)


def knowledge_leq(i: PartialInterpretation, j: PartialInterpretation) -> bool:
    """Knowledge order: ``j`` decides at least everything ``i`` decides, the same way."""
    return i.pos <= j.pos and i.neg <= j.neg


def is_total(i: PartialInterpretation, base: Iterable[Atom]) -> bool:
    return i.decided == frozenset(base)


def interpretation_json(i: PartialInterpretation, base: Iterable[Atom]) -> dict:
    """Render as ``{"true": [...], "false": [...], "undefined": [...]}``, sorted."""
    base = frozenset(base)
    return {
        "true": sorted(str(a) for a in i.pos),
        "false": sorted(str(a) for a in i.neg),
        "undefined": sorted(str(a) for a in base - i.decided),
    }
