"""Syntax layer: atoms, clauses, programs, parsing and grounding.

Input programs are function-free normal logic programs (Datalog with
negation).  Grounding a function-free program over its finite constant set
always terminates, so every fixpoint computation downstream closes after
finitely many steps.

Surface grammar (one clause per statement, ``%`` starts a line comment)::

    program  := { clause "." }
    clause   := atom [ ":-" body ]
    body     := literal { "," literal }
    literal  := [ "not" ] atom
    atom     := lowercase-ident [ "(" term {"," term} ")" ]
    term     := lowercase-ident (constant) | Uppercase-ident (variable)

``not`` is a reserved word and cannot be used as a predicate or constant
name.  Identifiers must start with a letter; the grounder's synthetic
constant starts with an underscore precisely so that it can never collide
with a constant written in source text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

# Injected when a program with variables declares no constant at all.  Not
# expressible in the surface grammar (identifiers must start with a letter).
SYNTHETIC_CONSTANT = "_g"

_RESERVED = {"not"}


def is_variable(term: str) -> bool:
    """A term is a variable iff it starts with an uppercase letter."""
    return term[:1].isupper()


@dataclass(frozen=True, order=True)
class Atom:
    """A predicate applied to constant-or-variable terms.

    Propositional atoms have empty ``args``.  After grounding, all args are
    constants.
    """

    predicate: str
    args: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.predicate:
            raise ValueError("atom predicate name must be nonempty")

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(t) for t in self.args)

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True, order=True)
class Literal:
    """An atom or its negation, as it appears in a clause body."""

    atom: Atom
    negated: bool = False

    def __str__(self) -> str:
        return f"not {self.atom}" if self.negated else str(self.atom)


@dataclass(frozen=True, order=True)
class Clause:
    """``head :- pos_body, not neg_body``; a clause with empty body is a fact."""

    head: Atom
    pos_body: tuple[Atom, ...] = ()
    neg_body: tuple[Atom, ...] = ()

    @property
    def is_fact(self) -> bool:
        return not self.pos_body and not self.neg_body

    @property
    def is_definite(self) -> bool:
        return not self.neg_body

    def body_literals(self) -> tuple[Literal, ...]:
        return tuple(Literal(a) for a in self.pos_body) + tuple(
            Literal(b, negated=True) for b in self.neg_body
        )

    def atoms(self) -> Iterator[Atom]:
        yield self.head
        yield from self.pos_body
        yield from self.neg_body

    def __str__(self) -> str:
        if self.is_fact:
            return f"{self.head}."
        body = ", ".join(str(lit) for lit in self.body_literals())
        return f"{self.head} :- {body}."


@dataclass(frozen=True)
class SourceProgram:
    """A finite clause list plus the constant symbols it ranges over.

    ``constants`` may include symbols that never occur in a clause; the
    grounder builds the Herbrand base over the full set.
    """

    clauses: tuple[Clause, ...]
    constants: frozenset[str] = frozenset()

    @classmethod
    def from_clauses(
        cls, clauses: Iterable[Clause], extra_constants: Iterable[str] = ()
    ) -> "SourceProgram":
        clauses = tuple(clauses)
        consts = set(extra_constants)
        for clause in clauses:
            for atom in clause.atoms():
                consts.update(t for t in atom.args if not is_variable(t))
        return cls(clauses, frozenset(consts))


@dataclass(frozen=True)
class GroundProgram:
    """A deduplicated set of ground clauses together with its Herbrand base."""

    clauses: frozenset[Clause]
    base: frozenset[Atom]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for atom in clause.atoms():
                if not atom.is_ground:
                    raise ValueError(f"non-ground atom {atom} in ground program")
                if atom not in self.base:
                    raise ValueError(f"atom {atom} occurs in a clause but not in base")

    @property
    def is_definite(self) -> bool:
        return all(c.is_definite for c in self.clauses)

    @cached_property
    def clauses_by_head(self) -> dict[Atom, tuple[Clause, ...]]:
        index: dict[Atom, list[Clause]] = {}
        for clause in sorted(self.clauses, key=str):
            index.setdefault(clause.head, []).append(clause)
        return {head: tuple(cs) for head, cs in index.items()}

    def clauses_for(self, atom: Atom) -> tuple[Clause, ...]:
        return self.clauses_by_head.get(atom, ())


# A reduct is an ordinary ground program whose clauses are all definite.
ReductProgram = GroundProgram


class ParseError(Exception):
    """Syntax error carrying 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT | VAR | PUNCT | EOF
    value: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<ident>[a-z][A-Za-z0-9_]*)
  | (?P<var>[A-Z][A-Za-z0-9_]*)
  | (?P<punct>:-|[,.()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        col = m.start() - line_start + 1
        kind = m.lastgroup
        value = m.group()
        if kind == "ident":
            tokens.append(_Token("IDENT", value, line, col))
        elif kind == "var":
            tokens.append(_Token("VAR", value, line, col))
        elif kind == "punct":
            tokens.append(_Token("PUNCT", value, line, col))
        # whitespace and comments are skipped, but track line numbers
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("EOF", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.current.line, self.current.column)

    def expect_punct(self, value: str) -> None:
        tok = self.current
        if tok.kind != "PUNCT" or tok.value != value:
            raise self.error(f"expected {value!r}, found {tok.value or 'end of input'!r}")
        self.advance()

    def parse_program(self) -> list[Clause]:
        clauses = []
        while self.current.kind != "EOF":
            clauses.append(self.parse_clause())
        return clauses

    def parse_clause(self) -> Clause:
        head = self.parse_atom()
        pos_body: list[Atom] = []
        neg_body: list[Atom] = []
        if self.current.kind == "PUNCT" and self.current.value == ":-":
            self.advance()
            while True:
                atom, negated = self.parse_literal()
                (neg_body if negated else pos_body).append(atom)
                if self.current.kind == "PUNCT" and self.current.value == ",":
                    self.advance()
                    continue
                break
        self.expect_punct(".")
        return Clause(head, tuple(pos_body), tuple(neg_body))

    def parse_literal(self) -> tuple[Atom, bool]:
        negated = False
        if self.current.kind == "IDENT" and self.current.value == "not":
            self.advance()
            negated = True
        return self.parse_atom(), negated

    def parse_atom(self) -> Atom:
        tok = self.current
        if tok.kind != "IDENT":
            raise self.error(f"expected an atom, found {tok.value or 'end of input'!r}")
        if tok.value in _RESERVED:
            raise self.error(f"{tok.value!r} is a reserved word")
        self.advance()
        args: list[str] = []
        if self.current.kind == "PUNCT" and self.current.value == "(":
            self.advance()
            while True:
                args.append(self.parse_term())
                if self.current.kind == "PUNCT" and self.current.value == ",":
                    self.advance()
                    continue
                break
            self.expect_punct(")")
        return Atom(tok.value, tuple(args))

    def parse_term(self) -> str:
        tok = self.current
        if tok.kind not in ("IDENT", "VAR"):
            raise self.error(f"expected a term, found {tok.value or 'end of input'!r}")
        if tok.value in _RESERVED:
            raise self.error(f"{tok.value!r} is a reserved word")
        self.advance()
        return tok.value


def parse_program(text: str) -> SourceProgram:
    """Parse program text; clauses are kept in source order, duplicates included."""
    clauses = _Parser(_tokenize(text)).parse_program()
    return SourceProgram.from_clauses(clauses)


def parse_atom(text: str) -> Atom:
    """Parse a single atom such as ``p`` or ``edge(a,b)``."""
    parser = _Parser(_tokenize(text))
    atom = parser.parse_atom()
    if parser.current.kind != "EOF":
        raise parser.error("trailing input after atom")
    return atom


def _substitute(atom: Atom, binding: dict[str, str]) -> Atom:
    if not atom.args:
        return atom
    return Atom(atom.predicate, tuple(binding.get(t, t) for t in atom.args))


def ground(program: SourceProgram) -> GroundProgram:
    """Instantiate all clauses over the program's constants and build the base.

    A program that declares no constant gets one synthetic constant, so that
    grounding a clause with variables is always possible.  The base contains
    every atom buildable from the program's predicates and the constant set,
    which may be a strict superset of the atoms occurring in clauses.
    """
    predicates: set[tuple[str, int]] = set()
    constants: set[str] = set(program.constants)
    for clause in program.clauses:
        for atom in clause.atoms():
            predicates.add((atom.predicate, len(atom.args)))
            constants.update(t for t in atom.args if not is_variable(t))
    if not constants:
        constants = {SYNTHETIC_CONSTANT}
    const_order = sorted(constants)

    ground_clauses: set[Clause] = set()
    for clause in program.clauses:
        variables: list[str] = []
        for atom in clause.atoms():
            for term in atom.args:
                if is_variable(term) and term not in variables:
                    variables.append(term)
        for values in product(const_order, repeat=len(variables)):
            binding = dict(zip(variables, values))
            ground_clauses.add(
                Clause(
                    _substitute(clause.head, binding),
                    tuple(_substitute(a, binding) for a in clause.pos_body),
                    tuple(_substitute(b, binding) for b in clause.neg_body),
                )
            )

    base: set[Atom] = set()
    for predicate, arity in predicates:
        for args in product(const_order, repeat=arity):
            base.add(Atom(predicate, args))
    return GroundProgram(frozenset(ground_clauses), frozenset(base))


def herbrand_base(program: GroundProgram) -> frozenset[Atom]:
    """All ground atoms over the program's predicates and constants."""
    return program.base


def program_text(program: SourceProgram | GroundProgram) -> str:
    """Render a program in the input grammar, one clause per line.

    Source programs keep clause order; ground programs are printed in
    sorted order so that rendering is deterministic.
    """
    if isinstance(program, GroundProgram):
        clauses: Iterable[Clause] = sorted(program.clauses, key=str)
    else:
        clauses = program.clauses
    return "\n".join(str(c) for c in clauses) + ("\n" if program.clauses else "")
