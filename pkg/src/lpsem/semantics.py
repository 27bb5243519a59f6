"""Named semantics assembled from the operator kernel.

Single-model semantics (least/greatest for definite programs, Fitting,
well-founded, and the maximally circular variant of the well-founded model)
are fixpoints of monotone operators and come with full iteration traces.
Model-enumerating semantics (stable, maxstable, supported) are computed by
exhaustive subset search below a configurable cap; the point of this engine
is oracle fidelity, not scalability.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .interp import PartialInterpretation, TwoValued, is_total, total_extension
from .operators import (
    FixpointTrace,
    NotDefiniteError,
    OperatorInvariantError,
    cgl,
    cw_op,
    gfp_definite,
    gl,
    iterate_to_fixpoint,
    lfp_definite,
    phi,
    tp_plus,
    wp_op,
)
from .syntax import Atom, GroundProgram

DEFAULT_ENUM_CAP = 20


class CapExceededError(Exception):
    """Exhaustive enumeration was requested above the configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: base has {size} atoms, cap is {cap}")
        self.size = size
        self.cap = cap


def least_model(g: GroundProgram) -> TwoValued:
    if not g.is_definite:
        raise NotDefiniteError("least model is only defined for definite programs")
    return lfp_definite(g)


def greatest_model(g: GroundProgram) -> TwoValued:
    if not g.is_definite:
        raise NotDefiniteError("greatest model is only defined for definite programs")
    return gfp_definite(g)


def fitting_trace(g: GroundProgram) -> FixpointTrace:
    return iterate_to_fixpoint(
        lambda i: phi(g, i), PartialInterpretation(), base_size=len(g.base)
    )


def fitting_model(g: GroundProgram) -> PartialInterpretation:
    """Least fixpoint of the revision operator, starting from no knowledge."""
    return fitting_trace(g).fixpoint


def wf_trace(g: GroundProgram) -> FixpointTrace:
    return iterate_to_fixpoint(
        lambda i: wp_op(g, i), PartialInterpretation(), base_size=len(g.base)
    )


def well_founded_model(g: GroundProgram) -> PartialInterpretation:
    return wf_trace(g).fixpoint


def maxwf_trace(g: GroundProgram) -> FixpointTrace:
    return iterate_to_fixpoint(
        lambda i: cw_op(g, i), PartialInterpretation(), base_size=len(g.base)
    )


def maxwf_model(g: GroundProgram) -> PartialInterpretation:
    """Truth-preferring counterpart of the well-founded model."""
    return maxwf_trace(g).fixpoint


@dataclass(frozen=True)
class AlternatingPair:
    """Extreme fixpoints of a squared antitone operator; lfp_sq ⊆ gfp_sq."""

    lfp_sq: TwoValued
    gfp_sq: TwoValued

    def __post_init__(self) -> None:
        if not self.lfp_sq <= self.gfp_sq:
            raise OperatorInvariantError("lfp of squared operator exceeds its gfp")


def _alternating(g: GroundProgram, step) -> tuple[AlternatingPair, PartialInterpretation]:
    squared = lambda m: step(g, step(g, m))
    n = len(g.base)
    lo = iterate_to_fixpoint(squared, frozenset(), direction="up", base_size=n).fixpoint
    hi = iterate_to_fixpoint(squared, g.base, direction="down", base_size=n).fixpoint
    # the single-step operator must swap the two extremes
    if step(g, lo) != hi or step(g, hi) != lo:
        raise OperatorInvariantError("alternating extremes are not exchanged by the operator")
    model = PartialInterpretation(lo, g.base - hi)
    return AlternatingPair(lo, hi), model


def wf_alternating(g: GroundProgram) -> tuple[AlternatingPair, PartialInterpretation]:
    """Well-founded model out of the squared reduct-least-model operator."""
    return _alternating(g, gl)


def maxwf_alternating(g: GroundProgram) -> tuple[AlternatingPair, PartialInterpretation]:
    """Same construction with greatest fixpoints of reducts."""
    return _alternating(g, cgl)


def _subsets(base: frozenset[Atom]):
    atoms = sorted(base, key=str)
    for size in range(len(atoms) + 1):
        for combo in combinations(atoms, size):
            yield frozenset(combo)


def _model_sort_key(m: TwoValued) -> tuple[str, ...]:
    return tuple(sorted(str(a) for a in m))


def _enumerate_fixed_points(g: GroundProgram, op, what: str, cap: int) -> tuple[TwoValued, ...]:
    if len(g.base) > cap:
        raise CapExceededError(what, len(g.base), cap)
    found = [m for m in _subsets(g.base) if op(g, m) == m]
    return tuple(sorted(found, key=_model_sort_key))


def stable_models(g: GroundProgram, cap: int = DEFAULT_ENUM_CAP) -> tuple[TwoValued, ...]:
    """All subsets reproduced exactly by the least model of their reduct."""
    return _enumerate_fixed_points(g, gl, "stable model enumeration", cap)


def maxstable_models(g: GroundProgram, cap: int = DEFAULT_ENUM_CAP) -> tuple[TwoValued, ...]:
    """All subsets reproduced exactly by the greatest fixpoint of their reduct."""
    return _enumerate_fixed_points(g, cgl, "maxstable model enumeration", cap)


def supported_models(g: GroundProgram, cap: int = DEFAULT_ENUM_CAP) -> tuple[TwoValued, ...]:
    """All fixed points of the total-reading consequence operator."""
    return _enumerate_fixed_points(g, tp_plus, "supported model enumeration", cap)


def is_stable(g: GroundProgram, m: TwoValued) -> bool:
    return gl(g, m) == m


def is_maxstable(g: GroundProgram, m: TwoValued) -> bool:
    return cgl(g, m) == m


def is_supported(g: GroundProgram, m: TwoValued) -> bool:
    """Supported interpretation: every member atom has a firing clause."""
    return m <= tp_plus(g, m)


SEMANTICS_NAMES = (
    "least",
    "greatest",
    "fitting",
    "wf",
    "wf-alt",
    "maxwf",
    "maxwf-alt",
    "stable",
    "maxstable",
    "supported",
)


@dataclass(frozen=True)
class SemanticsResult:
    """One computed semantics: a single (partial) model or an enumerated set."""

    name: str
    model: PartialInterpretation | tuple[TwoValued, ...]
    total: bool | None = None
    trace: FixpointTrace | None = None
    pair: AlternatingPair | None = None


def compute_semantics(
    g: GroundProgram, name: str, *, cap: int = DEFAULT_ENUM_CAP
) -> SemanticsResult:
    """Dispatch a semantics by name; see SEMANTICS_NAMES for the selectors."""
    if name == "least":
        model = total_extension(least_model(g), g.base)
        return SemanticsResult(name, model, total=True)
    if name == "greatest":
        model = total_extension(greatest_model(g), g.base)
        return SemanticsResult(name, model, total=True)
    if name in ("fitting", "wf", "maxwf"):
        trace = {"fitting": fitting_trace, "wf": wf_trace, "maxwf": maxwf_trace}[name](g)
        model = trace.fixpoint
        return SemanticsResult(name, model, total=is_total(model, g.base), trace=trace)
    if name in ("wf-alt", "maxwf-alt"):
        pair, model = (wf_alternating if name == "wf-alt" else maxwf_alternating)(g)
        return SemanticsResult(name, model, total=is_total(model, g.base), pair=pair)
    if name == "stable":
        return SemanticsResult(name, stable_models(g, cap))
    if name == "maxstable":
        return SemanticsResult(name, maxstable_models(g, cap))
    if name == "supported":
        return SemanticsResult(name, supported_models(g, cap))
    raise ValueError(f"unknown semantics {name!r}")
