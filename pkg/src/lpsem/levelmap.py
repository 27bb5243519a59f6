"""Level mappings: rank-based characterizations of the semantics.

A level mapping assigns natural-number ranks to atoms.  Each Condition below
is a clause-wise requirement relating the rank of a head to the ranks of its
body atoms; the semantics computed by fixpoint iteration in
:mod:`lpsem.semantics` are characterized as greatest models admitting such a
mapping, and the functions here verify those characterizations by exhaustive
search at small scale.

Only the relative order of levels matters (all comparisons are < and <=), so
any satisfiable condition is satisfiable with at most ``|domain|`` distinct
levels; the search space is therefore finite and complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable

from .interp import PartialInterpretation, TwoValued, is_model, knowledge_leq
from .operators import NotDefiniteError
from .semantics import CapExceededError
from .syntax import Atom, GroundProgram, Literal

LEVEL_SEARCH_CAP = 6


class Condition(Enum):
    """Identifiers for the clause-wise level-mapping conditions.

    The four partial-interpretation conditions pair a truth rule with a
    falsity rule.  The strict truth rule demands a clause whose body is true
    with strictly smaller levels; the circular one lets positive body atoms
    sit at the same level (mutual support).  Dually, the strict falsity rule
    refutes an atom through a strictly smaller false literal in every clause,
    while the circular one also accepts a same-level false positive atom.

    * F             : strict truth + strict falsity
    * WF            : strict truth + circular falsity
    * CW            : circular truth + strict falsity
    * BOTH_CIRCULAR : circular truth + circular falsity; admits incomparable
                      maximal models, so no semantics is based on it
    """

    DEF_LEAST = "def-least"
    FAGES = "fages"
    F = "fitting"
    WF = "well-founded"
    CW = "circular-well-founded"
    BOTH_CIRCULAR = "both-circular"
    MAXSTABLE = "maxstable"
    DEF_GREATEST = "def-greatest"
    LOCALLY_STRATIFIED = "locally-stratified"


PARTIAL_CONDITIONS = frozenset(
    {Condition.F, Condition.WF, Condition.CW, Condition.BOTH_CIRCULAR}
)
TOTAL_CONDITIONS = frozenset(
    {
        Condition.DEF_LEAST,
        Condition.FAGES,
        Condition.MAXSTABLE,
        Condition.DEF_GREATEST,
        Condition.LOCALLY_STRATIFIED,
    }
)


class DomainMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class LevelMapping:
    """Partial mapping from atoms to natural-number levels.

    Extended to literals by giving a negated atom the level of its atom.
    """

    levels: dict[Atom, int]

    @property
    def domain(self) -> frozenset[Atom]:
        return frozenset(self.levels)

    def __getitem__(self, atom: Atom) -> int:
        return self.levels[atom]

    def of(self, item: Atom | Literal) -> int:
        atom = item.atom if isinstance(item, Literal) else item
        return self.levels[atom]

    def __str__(self) -> str:
        inner = ", ".join(f"{a}:{lv}" for a, lv in sorted(self.levels.items(), key=lambda kv: str(kv[0])))
        return "{" + inner + "}"


# ---------------------------------------------------------------------------
# per-atom rules for the partial-interpretation conditions


def _truth_strict(g, i, l, a) -> bool:
    if a not in i.pos:
        return False
    la = l[a]
    for c in g.clauses_for(a):
        if (
            all(p in i.pos and la > l[p] for p in c.pos_body)
            and all(b in i.neg and la > l[b] for b in c.neg_body)
        ):
            return True
    return False


def _truth_circular(g, i, l, a) -> bool:
    if a not in i.pos:
        return False
    la = l[a]
    for c in g.clauses_for(a):
        if (
            all(p in i.pos and la >= l[p] for p in c.pos_body)
            and all(b in i.neg and la > l[b] for b in c.neg_body)
        ):
            return True
    return False


def _falsity_strict(g, i, l, a) -> bool:
    if a not in i.neg:
        return False
    la = l[a]
    for c in g.clauses_for(a):
        refuted = any(p in i.neg and la > l[p] for p in c.pos_body) or any(
            b in i.pos and la > l[b] for b in c.neg_body
        )
        if not refuted:
            return False
    return True


def _falsity_circular(g, i, l, a) -> bool:
    if a not in i.neg:
        return False
    la = l[a]
    for c in g.clauses_for(a):
        refuted = any(p in i.neg and la >= l[p] for p in c.pos_body) or any(
            b in i.pos and la > l[b] for b in c.neg_body
        )
        if not refuted:
            return False
    return True


_PARTIAL_RULES = {
    Condition.F: (_truth_strict, _falsity_strict),
    Condition.WF: (_truth_strict, _falsity_circular),
    Condition.CW: (_truth_circular, _falsity_strict),
    Condition.BOTH_CIRCULAR: (_truth_circular, _falsity_circular),
}


def _check_partial(g, i: PartialInterpretation, l: LevelMapping, c: Condition) -> bool:
    truth_rule, falsity_rule = _PARTIAL_RULES[c]
    return all(
        truth_rule(g, i, l, a) or falsity_rule(g, i, l, a) for a in l.levels
    )


# ---------------------------------------------------------------------------
# total-mapping conditions


def _check_def_least(g, m: TwoValued, l: LevelMapping) -> bool:
    for a in m:
        la = l[a]
        if not any(
            all(p in m and la > l[p] for p in c.pos_body) for c in g.clauses_for(a)
        ):
            return False
    return True


def _check_fages(g, m: TwoValued, l: LevelMapping) -> bool:
    for a in m:
        la = l[a]
        if not any(
            all(p in m and la > l[p] for p in c.pos_body)
            and not any(b in m for b in c.neg_body)
            for c in g.clauses_for(a)
        ):
            return False
    return True


def _check_def_greatest(g, m: TwoValued, l: LevelMapping) -> bool:
    for a in g.base - m:
        la = l[a]
        for c in g.clauses_for(a):
            if not any(p not in m and la > l[p] for p in c.pos_body):
                return False
    return True


def _check_maxstable(g, m: TwoValued, l: LevelMapping) -> bool:
    for a in g.base - m:
        la = l[a]
        for c in g.clauses_for(a):
            if any(b in m for b in c.neg_body):
                continue  # clause already blocked by its negative part
            if not any(p not in m and la > l[p] for p in c.pos_body):
                return False
    return True


def _check_locally_stratified(g, l: LevelMapping) -> bool:
    for c in g.clauses:
        lh = l[c.head]
        if any(lh < l[p] for p in c.pos_body) or any(lh <= l[b] for b in c.neg_body):
            return False
    return True


def check_condition(
    g: GroundProgram,
    i: PartialInterpretation | TwoValued | None,
    l: LevelMapping,
    c: Condition,
) -> bool:
    """Does every atom in scope satisfy the clause-wise condition ``c``?

    Partial conditions take a PartialInterpretation whose decided atoms equal
    the mapping's domain; total conditions take a two-valued interpretation
    (a set of atoms) and a mapping that is total on the base.  Modelhood or
    supportedness requirements of the surrounding theorems are deliberately
    not checked here; callers combine them as needed.
    """
    if c in PARTIAL_CONDITIONS:
        if not isinstance(i, PartialInterpretation):
            raise TypeError(f"{c.name} requires a partial interpretation")
        if l.domain != i.decided:
            raise DomainMismatchError(
                "mapping domain must equal the decided atoms of the interpretation"
            )
        return _check_partial(g, i, l, c)

    if l.domain != g.base:
        raise DomainMismatchError(f"{c.name} requires a mapping that is total on the base")
    if c is Condition.LOCALLY_STRATIFIED:
        return _check_locally_stratified(g, l)
    if not isinstance(i, (set, frozenset)):
        raise TypeError(f"{c.name} requires a two-valued interpretation")
    m = frozenset(i)
    if c is Condition.DEF_LEAST:
        if not g.is_definite:
            raise NotDefiniteError("condition DEF_LEAST applies to definite programs")
        return _check_def_least(g, m, l)
    if c is Condition.DEF_GREATEST:
        if not g.is_definite:
            raise NotDefiniteError("condition DEF_GREATEST applies to definite programs")
        return _check_def_greatest(g, m, l)
    if c is Condition.FAGES:
        return _check_fages(g, m, l)
    if c is Condition.MAXSTABLE:
        return _check_maxstable(g, m, l)
    raise ValueError(f"unknown condition {c!r}")


def _mapping_domain(
    g: GroundProgram, i: PartialInterpretation | TwoValued | None, c: Condition
) -> list[Atom]:
    if c in PARTIAL_CONDITIONS:
        if not isinstance(i, PartialInterpretation):
            raise TypeError(f"{c.name} requires a partial interpretation")
        return sorted(i.decided, key=str)
    return sorted(g.base, key=str)


def find_level_mapping(
    g: GroundProgram,
    i: PartialInterpretation | TwoValued | None,
    c: Condition,
    max_levels: int | None = None,
    cap: int = LEVEL_SEARCH_CAP,
) -> LevelMapping | None:
    """Exhaustively search for a mapping satisfying ``c``; None if there is none.

    Levels range over ``0 .. max_levels-1`` with ``max_levels`` defaulting to
    the domain size, which is complete because the conditions only compare
    levels relative to each other.
    """
    domain = _mapping_domain(g, i, c)
    if len(domain) > cap:
        raise CapExceededError("level mapping search", len(domain), cap)
    if max_levels is None:
        max_levels = max(1, len(domain))
    for levels in product(range(max_levels), repeat=len(domain)):
        mapping = LevelMapping(dict(zip(domain, levels)))
        if check_condition(g, i, mapping, c):
            return mapping
    return None


def _all_partial_interpretations(base: frozenset[Atom]):
    atoms = sorted(base, key=str)
    for signs in product((None, True, False), repeat=len(atoms)):
        pos = frozenset(a for a, s in zip(atoms, signs) if s is True)
        neg = frozenset(a for a, s in zip(atoms, signs) if s is False)
        yield PartialInterpretation(pos, neg)


@dataclass(frozen=True)
class GreatestModelResult:
    """Outcome of the greatest-mapped-model search.

    When no greatest element exists, ``witnesses`` holds two incomparable
    maximal candidates (the search found candidates but no single top).
    """

    greatest: PartialInterpretation | None
    witnesses: tuple[PartialInterpretation, ...] = ()


def greatest_model_with_condition(
    g: GroundProgram, c: Condition, cap: int = 4
) -> GreatestModelResult:
    """Greatest model of ``g`` admitting a level mapping for ``c``, by brute force.

    Enumerates every consistent partial interpretation over the base, keeps
    those that are models of ``g`` and admit a mapping, and looks for a
    greatest element in the knowledge order.
    """
    if c not in PARTIAL_CONDITIONS:
        raise ValueError(f"{c.name} is not a partial-interpretation condition")
    if len(g.base) > cap:
        raise CapExceededError("greatest mapped model search", len(g.base), cap)

    candidates = [
        i
        for i in _all_partial_interpretations(g.base)
        if is_model(g, i) and find_level_mapping(g, i, c) is not None
    ]
    for candidate in candidates:
        if all(knowledge_leq(other, candidate) for other in candidates):
            return GreatestModelResult(candidate)
    maximal = [
        i
        for i in candidates
        if not any(other != i and knowledge_leq(i, other) for other in candidates)
    ]
    maximal.sort(key=lambda i: (sorted(map(str, i.pos)), sorted(map(str, i.neg))))
    return GreatestModelResult(None, tuple(maximal[:2]))


def _strongly_connected_components(
    nodes: Iterable[Atom], successors: dict[Atom, list[Atom]]
) -> dict[Atom, int]:
    """Iterative Tarjan; returns a component id per node."""
    index: dict[Atom, int] = {}
    low: dict[Atom, int] = {}
    on_stack: set[Atom] = set()
    stack: list[Atom] = []
    component: dict[Atom, int] = {}
    counter = 0
    comp_id = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors.get(root, ())))]
        while work:
            node, succ_iter = work[-1]
            pushed = False
            for succ in succ_iter:
                if succ not in index:
                    index[succ] = low[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(successors.get(succ, ()))))
                    pushed = True
                    break
                if succ in on_stack:
                    low[node] = min(low[node], index[succ])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component[w] = comp_id
                    if w == node:
                        break
                comp_id += 1
    return component


def is_locally_stratified(g: GroundProgram) -> bool:
    """No negative dependency inside a cycle of the atom dependency graph.

    Equivalent to the existence of a total level mapping that never increases
    through positive body atoms and strictly decreases through negated ones;
    the graph formulation decides this without searching mappings.
    """
    successors: dict[Atom, list[Atom]] = {}
    strict_edges: list[tuple[Atom, Atom]] = []
    for clause in g.clauses:
        succ = successors.setdefault(clause.head, [])
        succ.extend(clause.pos_body)
        succ.extend(clause.neg_body)
        strict_edges.extend((clause.head, b) for b in clause.neg_body)
    component = _strongly_connected_components(sorted(g.base, key=str), successors)
    return not any(component[u] == component[v] for u, v in strict_edges)


def extract_level_mapping_from_trace(trace) -> LevelMapping:
    """Read levels off an upward iteration: an atom's level is one less than
    the index of the first stage that decides it."""
    stages = trace.stages
    if not isinstance(stages[0], PartialInterpretation):
        raise TypeError("trace must iterate partial interpretations")
    if stages[0].decided:
        raise ValueError("trace must start from the empty interpretation")
    levels: dict[Atom, int] = {}
    for k in range(1, len(stages)):
        for atom in stages[k].decided - stages[k - 1].decided:
            levels[atom] = k - 1
    return LevelMapping(levels)
