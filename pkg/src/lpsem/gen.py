"""Seeded random propositional programs for fuzzing the semantics engine.

Generation is deterministic per seed.  The stratified mode assigns each atom
its index as a level and only ever points negative body literals strictly
downward, so the output is locally stratified by construction.
"""

from __future__ import annotations

import random
import string

from .syntax import Atom, Clause, SourceProgram


def atom_names(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"x{i:03d}" for i in range(n)]


def random_program(
    atoms: int,
    clauses: int,
    *,
    seed: int,
    max_body: int = 3,
    neg_prob: float = 0.3,
    stratified: bool = False,
) -> SourceProgram:
    if atoms < 1 or clauses < 0:
        raise ValueError("need at least one atom and a nonnegative clause count")
    if not 0.0 <= neg_prob <= 1.0:
        raise ValueError("neg_prob must be within [0, 1]")
    rng = random.Random(seed)
    universe = [Atom(name) for name in atom_names(atoms)]
    out: list[Clause] = []
    for _ in range(clauses):
        head_index = rng.randrange(atoms)
        pos: list[Atom] = []
        neg: list[Atom] = []
        for _ in range(rng.randint(0, max_body)):
            if stratified:
                body_index = rng.randrange(head_index + 1)
                negated = body_index < head_index and rng.random() < neg_prob
            else:
                body_index = rng.randrange(atoms)
                negated = rng.random() < neg_prob
            atom = universe[body_index]
            bucket = neg if negated else pos
            if atom not in bucket:
                bucket.append(atom)
        out.append(Clause(universe[head_index], tuple(pos), tuple(neg)))
    return SourceProgram.from_clauses(out)
