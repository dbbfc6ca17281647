"""Core domain types: atoms, labelled rules, programs, explanations, proof trees.

A rule is a labelled implication whose head is a disjunction of atoms and
whose body mixes plain, negated and doubly-negated atoms.  A program is a
finite list of such rules with pairwise-distinct labels.  All values here are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import chain
from typing import Iterable, Iterator, Mapping

_TOKEN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class SgxError(Exception):
    """Base class for every error raised by this package."""


class DuplicateLabelError(SgxError):
    def __init__(self, label: "Label"):
        self.label = label
        super().__init__(f"duplicate rule label {label.id!r}")


class DuplicateAtomError(SgxError):
    def __init__(self, label: "Label", atom: "Atom", field: str):
        self.label = label
        self.atom = atom
        self.field = field
        super().__init__(f"atom {atom.name!r} occurs twice in {field} of rule {label.id!r}")


def _check_token(kind: str, text: str) -> None:
    if not _TOKEN.match(text):
        raise ValueError(f"invalid {kind} {text!r}: expected a token matching [a-z][A-Za-z0-9_]*")


@dataclass(frozen=True, order=True)
class Atom:
    """A propositional atom, identified by its name."""

    name: str

    def __post_init__(self):
        _check_token("atom name", self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Label:
    """A rule name.  Labels live in a separate namespace from atoms."""

    id: str

    def __post_init__(self):
        _check_token("label", self.id)

    def __str__(self) -> str:
        return self.id


#: An interpretation is a plain set of atoms; operations that need a program
#: context take it as a separate argument.
Interpretation = frozenset[Atom]


@dataclass(frozen=True)
class Rule:
    """A labelled rule.

    ``head`` is the (possibly empty) disjunction; an empty head makes the rule
    a constraint.  ``pos_body``, ``neg_body`` and ``dneg_body`` hold the atoms
    occurring plain, under one negation and under double negation.  Field
    order is preserved so rendering is deterministic; within one field an atom
    may occur only once.
    """

    label: Label
    head: tuple[Atom, ...] = ()
    pos_body: tuple[Atom, ...] = ()
    neg_body: tuple[Atom, ...] = ()
    dneg_body: tuple[Atom, ...] = ()

    def __post_init__(self):
        for field in ("head", "pos_body", "neg_body", "dneg_body"):
            atoms = getattr(self, field)
            if len(set(atoms)) != len(atoms):
                dup = next(a for i, a in enumerate(atoms) if a in atoms[:i])
                raise DuplicateAtomError(self.label, dup, field)

    @cached_property
    def head_set(self) -> frozenset[Atom]:
        return frozenset(self.head)

    @cached_property
    def pos_set(self) -> frozenset[Atom]:
        return frozenset(self.pos_body)

    @cached_property
    def neg_set(self) -> frozenset[Atom]:
        return frozenset(self.neg_body)

    @cached_property
    def dneg_set(self) -> frozenset[Atom]:
        return frozenset(self.dneg_body)

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_disjunctive(self) -> bool:
        return len(self.head) >= 2

    @property
    def is_positive(self) -> bool:
        return not self.neg_body and not self.dneg_body

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not self.pos_body and self.is_positive

    def atoms(self) -> Iterator[Atom]:
        return chain(self.head, self.pos_body, self.neg_body, self.dneg_body)

    def positive_part(self) -> "Rule":
        """The rule with its negative body stripped, keeping the label."""
        return Rule(self.label, self.head, self.pos_body)


@dataclass(frozen=True)
class Program:
    """A finite list of rules with pairwise-distinct labels."""

    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        seen: set[Label] = set()
        for rule in self.rules:
            if rule.label in seen:
                raise DuplicateLabelError(rule.label)
            seen.add(rule.label)

    @cached_property
    def by_label(self) -> Mapping[Label, Rule]:
        return {r.label: r for r in self.rules}

    def rule(self, label: Label) -> Rule:
        return self.by_label[label]

    @cached_property
    def signature(self) -> frozenset[Atom]:
        return frozenset(a for r in self.rules for a in r.atoms())

    @cached_property
    def sorted_signature(self) -> tuple[Atom, ...]:
        return tuple(sorted(self.signature))

    @property
    def positive(self) -> bool:
        return all(r.is_positive for r in self.rules)

    @property
    def non_disjunctive(self) -> bool:
        return all(len(r.head) <= 1 for r in self.rules)

    @property
    def horn(self) -> bool:
        return self.positive and self.non_disjunctive


@dataclass(frozen=True)
class ProgramClass:
    positive: bool
    non_disjunctive: bool
    horn: bool


def validate_program(rules: Iterable[Rule]) -> Program:
    """Build a Program, rejecting duplicate labels (malformed rules cannot
    be constructed in the first place)."""
    return Program(tuple(rules))


def classify(program: Program) -> ProgramClass:
    return ProgramClass(program.positive, program.non_disjunctive, program.horn)


def interpretation(*names: str) -> Interpretation:
    return frozenset(Atom(n) for n in names)


def model_sort_key(interp: Interpretation) -> tuple[int, tuple[str, ...]]:
    """Orders interpretations by cardinality, then by sorted atom names."""
    return (len(interp), tuple(sorted(a.name for a in interp)))


def format_interpretation(interp: Interpretation) -> str:
    if not interp:
        return "∅"
    return " ".join(sorted(a.name for a in interp))


def is_acyclic(vertices: Iterable[Atom], edges: Iterable[tuple[Atom, Atom]]) -> bool:
    """True iff the directed graph has no cycle (Kahn's peeling)."""
    indegree = {v: 0 for v in vertices}
    successors: dict[Atom, list[Atom]] = {v: [] for v in indegree}
    for q, p in edges:
        indegree[p] += 1
        successors[q].append(p)
    queue = [v for v, d in indegree.items() if d == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    return removed == len(indegree)


@dataclass(frozen=True)
class Explanation:
    """A support graph of ``model``: each atom carries the label of a rule
    that fired for it, and its incoming edges come from that rule's positive
    body.  ``acyclic`` records whether the graph passed the acyclicity check
    (an explanation proper) or is a plain, possibly cyclic, support graph.

    The record is uniquely determined by ``labelling``; ``edges`` is the
    induced edge set, kept explicit for rendering and validation.
    """

    model: Interpretation
    labelling: Mapping[Atom, Label]
    edges: frozenset[tuple[Atom, Atom]]
    acyclic: bool

    @staticmethod
    def from_labelling(program: Program, model: Interpretation,
                       labelling: Mapping[Atom, Label]) -> "Explanation":
        """Reconstruct the induced edge set from the labelling alone."""
        edges: set[tuple[Atom, Atom]] = set()
        for p, label in labelling.items():
            rule = program.rule(label)
            edges.update((q, p) for q in rule.pos_body)
        return Explanation(frozenset(model), dict(labelling), frozenset(edges),
                           is_acyclic(model, edges))

    def sorted_items(self) -> list[tuple[Atom, Label]]:
        return sorted(self.labelling.items())

    def sorted_edges(self) -> list[tuple[Atom, Atom]]:
        return sorted(self.edges)

    def incoming(self, atom: Atom) -> frozenset[Atom]:
        return frozenset(q for q, p in self.edges if p == atom)


@dataclass(frozen=True)
class ProofTree:
    """A derivation of ``atom`` via the rule named ``label``; one premise
    subtree per positive-body atom, premises sorted by atom name.  An empty
    premise tuple is the ⊤ case."""

    atom: Atom
    label: Label
    premises: tuple["ProofTree", ...] = ()

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)
