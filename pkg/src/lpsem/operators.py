"""Semantic operators on ground programs.

All functions here are pure.  The three-valued operators (``phi``, ``wp_op``,
``cw_op``) map partial interpretations to partial interpretations; the
two-valued ones (``tp_plus``, ``gl``, ``cgl``) work on subsets of the base.
Downward constructions (greatest unfounded set, greatest self-founded set,
greatest fixed point of a definite program) are realized by finite downward
iteration from the top of the relevant lattice; the base is finite, so every
iteration here closes after at most ``|base| + 1`` steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal as TypingLiteral, TypeVar

from .interp import PartialInterpretation, TwoValued, knowledge_leq
from .syntax import Atom, Clause, GroundProgram, ReductProgram


class NotDefiniteError(ValueError):
    """A definite-program operation was applied to a program with negation."""


class OperatorInvariantError(RuntimeError):
    """An operator produced output violating an invariant it must guarantee."""


class NonMonotoneOperatorError(RuntimeError):
    """Fixpoint iteration detected behaviour only a non-monotone operator can show."""


def _body_true(clause: Clause, i: PartialInterpretation) -> bool:
    return all(a in i.pos for a in clause.pos_body) and all(
        b in i.neg for b in clause.neg_body
    )


def _body_false(clause: Clause, i: PartialInterpretation) -> bool:
    return any(a in i.neg for a in clause.pos_body) or any(
        b in i.pos for b in clause.neg_body
    )


def tp(g: GroundProgram, i: PartialInterpretation) -> frozenset[Atom]:
    """Heads of clauses whose body is true in ``i``."""
    return frozenset(c.head for c in g.clauses if _body_true(c, i))


def fp(g: GroundProgram, i: PartialInterpretation) -> frozenset[Atom]:
    """Atoms all of whose clauses have a false body in ``i``.

    Atoms with no clauses qualify vacuously.
    """
    return frozenset(
        a for a in g.base if all(_body_false(c, i) for c in g.clauses_for(a))
    )


def phi(g: GroundProgram, i: PartialInterpretation) -> PartialInterpretation:
    """One revision step: derive heads of true bodies, refute all-false atoms."""
    pos = tp(g, i)
    neg = fp(g, i)
    if pos & neg:
        raise OperatorInvariantError(
            f"derived and refuted simultaneously: {sorted(map(str, pos & neg))}"
        )
    return PartialInterpretation(pos, neg)


def greatest_unfounded(g: GroundProgram, i: PartialInterpretation) -> frozenset[Atom]:
    """Greatest set U such that every member's clauses each have a body literal
    false in ``i`` or a positive body atom inside U.

    Computed by downward iteration from the full base; the limit is the union
    of all such sets.
    """
    u = set(g.base)
    while True:
        nxt = {
            a
            for a in u
            if all(
                _body_false(c, i) or any(b in u for b in c.pos_body)
                for c in g.clauses_for(a)
            )
        }
        if nxt == u:
            return frozenset(u)
        u = nxt


def wp_op(g: GroundProgram, i: PartialInterpretation) -> PartialInterpretation:
    """Derive heads of true bodies, refute the greatest unfounded set.

    Consistent on every interpretation reachable by iteration from the empty
    one; on other inputs the result may clash, which is surfaced as an
    InconsistencyError rather than silently repaired.
    """
    return PartialInterpretation(tp(g, i), greatest_unfounded(g, i))


def tp_plus(g: GroundProgram, m: TwoValued) -> TwoValued:
    """Immediate consequences under the total reading of ``m``."""
    return frozenset(
        c.head
        for c in g.clauses
        if all(a in m for a in c.pos_body) and not any(b in m for b in c.neg_body)
    )


def reduct(g: GroundProgram, m: TwoValued) -> ReductProgram:
    """Drop clauses with a negative literal hit by ``m``; strip negation from the rest."""
    kept = frozenset(
        Clause(c.head, c.pos_body)
        for c in g.clauses
        if not any(b in m for b in c.neg_body)
    )
    return GroundProgram(kept, g.base)


def _require_definite(r: ReductProgram) -> None:
    if not r.is_definite:
        raise NotDefiniteError("program contains negation")


def lfp_definite(r: ReductProgram) -> TwoValued:
    """Least fixed point of the consequence operator of a definite program."""
    _require_definite(r)
    m: TwoValued = frozenset()
    while True:
        nxt = tp_plus(r, m)
        if nxt == m:
            return m
        m = nxt


def gfp_definite(r: ReductProgram) -> TwoValued:
    """Greatest fixed point, reached by iterating down from the full base."""
    _require_definite(r)
    m: TwoValued = r.base
    while True:
        nxt = tp_plus(r, m)
        if nxt == m:
            return m
        m = nxt


def gl(g: GroundProgram, m: TwoValued) -> TwoValued:
    """Least model of the reduct by ``m``."""
    return lfp_definite(reduct(g, m))


def cgl(g: GroundProgram, m: TwoValued) -> TwoValued:
    """Greatest fixed point of the reduct by ``m`` (truth-preferring twin of ``gl``)."""
    return gfp_definite(reduct(g, m))


def greatest_self_founded(
    g: GroundProgram, i: PartialInterpretation
) -> frozenset[Atom]:
    """Greatest set S, consistent with ``i``, each of whose members has a clause
    whose negative literals are true in ``i`` and whose positive atoms are true
    in ``i`` or inside S.

    Mutual positive support within S is allowed; that is what distinguishes
    this construction from plain derivability.
    """
    s = set(g.base - i.neg)
    while True:
        nxt = {
            a
            for a in s
            if any(
                all(b in i.neg for b in c.neg_body)
                and all(p in i.pos or p in s for p in c.pos_body)
                for c in g.clauses_for(a)
            )
        }
        if nxt == s:
            return frozenset(s)
        s = nxt


def cw_op(g: GroundProgram, i: PartialInterpretation) -> PartialInterpretation:
    """Accept the greatest self-founded set, refute all-false atoms."""
    pos = greatest_self_founded(g, i)
    neg = fp(g, i)
    if pos & neg:
        raise OperatorInvariantError(
            f"self-founded and refuted simultaneously: {sorted(map(str, pos & neg))}"
        )
    return PartialInterpretation(pos, neg)


@dataclass(frozen=True)
class FixpointTrace:
    """Snapshots of an iteration up to and including the first repeated stage.

    ``closure_index`` is the first index k with ``stages[k+1] == stages[k]``;
    the stage at that index is the fixpoint.
    """

    stages: tuple
    closure_index: int

    @property
    def fixpoint(self):
        return self.stages[-1]


_Value = TypeVar("_Value", PartialInterpretation, TwoValued)


def _ordered(a, b, direction: str) -> bool:
    if isinstance(a, PartialInterpretation):
        leq = knowledge_leq(a, b) if direction == "up" else knowledge_leq(b, a)
    else:
        leq = a <= b if direction == "up" else b <= a
    return leq


def iterate_to_fixpoint(
    op: Callable[[_Value], _Value],
    start: _Value,
    *,
    direction: TypingLiteral["up", "down"] = "up",
    base_size: int,
) -> FixpointTrace:
    """Iterate a monotone operator from ``start`` until a stage repeats.

    The stages must form a chain in the stated direction; a violated chain or
    more than ``2 * base_size + 2`` transitions means the operator is not the
    monotone set-growth/shrink map it was claimed to be, and is reported as
    NonMonotoneOperatorError instead of looping.
    """
    cap = 2 * base_size + 2
    stages = [start]
    current = start
    for step in range(cap):
        nxt = op(current)
        if not _ordered(current, nxt, direction):
            raise NonMonotoneOperatorError(
                f"stage {step + 1} is not {direction}-ordered after stage {step}"
            )
        stages.append(nxt)
        if nxt == current:
            return FixpointTrace(tuple(stages), closure_index=step)
        current = nxt
    raise NonMonotoneOperatorError(f"no fixpoint within {cap} transitions")
