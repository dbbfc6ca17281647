"""Support graphs and explanations of a classical model.

An explanation assigns each true atom the label of a rule that fired for it,
no label twice, with the rule's positive body as the atom's incoming edges and
no cycles anywhere.  Dropping the acyclicity requirement gives plain support
graphs.  Enumeration searches the per-atom support sets in deterministic
order, so two runs produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    Atom,
    Explanation,
    Interpretation,
    Label,
    Program,
    Rule,
    SgxError,
    format_interpretation,
    is_acyclic,
    model_sort_key,
)
from .semantics import (
    enumerate_models,
    is_model,
    is_stable,
    reduct,
    satisfies_body,
    support,
)


class NotAModelError(SgxError):
    def __init__(self, interp: Interpretation):
        self.interp = interp
        super().__init__(f"{{{format_interpretation(interp)}}} is not a classical model "
                         "of the program")


class ModelMismatchError(SgxError):
    def __init__(self):
        super().__init__("the candidate's vertex set differs from the model under test")


class NotStableError(SgxError):
    def __init__(self, interp: Interpretation):
        self.interp = interp
        super().__init__(f"{{{format_interpretation(interp)}}} is not a stable model")


def validate_explanation(program: Program, interp: Interpretation,
                         candidate: Explanation, *, require_acyclic: bool = True) -> bool:
    """Check the support-graph conditions: injective labelling, per-atom fired
    rule with matching incoming edges and, unless disabled, acyclicity."""
    if candidate.model != interp:
        raise ModelMismatchError()
    if not is_model(interp, program):
        raise NotAModelError(interp)
    labelling = candidate.labelling
    if set(labelling) != set(interp):
        return False
    if len(set(labelling.values())) != len(labelling):
        return False
    if not all(q in interp and p in interp for q, p in candidate.edges):
        return False
    incoming: dict[Atom, set[Atom]] = {p: set() for p in interp}
    for q, p in candidate.edges:
        incoming[p].add(q)
    for atom, label in labelling.items():
        rule = program.by_label.get(label)
        if rule is None or atom not in rule.head_set:
            return False
        if not satisfies_body(interp, rule):
            return False
        if incoming[atom] != rule.pos_set:
            return False
    if require_acyclic and not is_acyclic(interp, candidate.edges):
        return False
    return True


def _search_graphs(program: Program, interp: Interpretation, *,
                   acyclic_only: bool, limit: int | None) -> list[Explanation]:
    # Per-atom candidate rules in (atom name, label id) order; labels are
    # forward-checked for injectivity and, when only acyclic graphs are
    # wanted, each atom's new incoming edges are cycle-checked incrementally.
    atoms = sorted(interp)
    candidates = []
    for atom in atoms:
        rules = sorted(support(interp, program, atom), key=lambda r: r.label.id)
        if not rules:
            return []
        candidates.append(rules)

    out: list[Explanation] = []
    chosen: dict[Atom, Rule] = {}
    used_labels: set[Label] = set()
    successors: dict[Atom, set[Atom]] = {a: set() for a in atoms}

    def reaches(start: Atom, targets: frozenset[Atom]) -> bool:
        stack, seen = [start], {start}
        while stack:
            node = stack.pop()
            if node in targets:
                return True
            for nxt in successors[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def assign(index: int) -> bool:
        if index == len(atoms):
            labelling = {a: r.label for a, r in chosen.items()}
            edges = frozenset((q, p) for p, r in chosen.items() for q in r.pos_body)
            acyclic = True if acyclic_only else is_acyclic(interp, edges)
            out.append(Explanation(interp, labelling, edges, acyclic))
            return limit is not None and len(out) >= limit
        atom = atoms[index]
        for rule in candidates[index]:
            if rule.label in used_labels:
                continue
            if acyclic_only and rule.pos_set and reaches(atom, rule.pos_set):
                continue
            chosen[atom] = rule
            used_labels.add(rule.label)
            for q in rule.pos_body:
                successors[q].add(atom)
            done = assign(index + 1)
            for q in rule.pos_body:
                successors[q].discard(atom)
            used_labels.discard(rule.label)
            del chosen[atom]
            if done:
                return True
        return False

    assign(0)
    return out


def enumerate_explanations(program: Program, interp: Interpretation,
                           limit: int | None = None) -> list[Explanation]:
    """All explanations of ``interp``, in lexicographic order of the
    (atom name -> label id) assignment; truncated at ``limit`` if given."""
    if not is_model(interp, program):
        raise NotAModelError(interp)
    return _search_graphs(program, interp, acyclic_only=True, limit=limit)


def enumerate_support_graphs(program: Program, interp: Interpretation,
                             limit: int | None = None) -> list[Explanation]:
    """Like :func:`enumerate_explanations` but without the acyclicity filter;
    each record's ``acyclic`` flag reports whether it happens to be acyclic."""
    if not is_model(interp, program):
        raise NotAModelError(interp)
    return _search_graphs(program, interp, acyclic_only=False, limit=limit)


def is_justified(program: Program, interp: Interpretation) -> bool:
    """Existence of an explanation, by first-solution search.  Non-models are
    simply not justified."""
    if not is_model(interp, program):
        return False
    return bool(_search_graphs(program, interp, acyclic_only=True, limit=1))


def is_supported(program: Program, interp: Interpretation) -> bool:
    """Existence of a support graph (cycles allowed)."""
    if not is_model(interp, program):
        return False
    return bool(_search_graphs(program, interp, acyclic_only=False, limit=1))


Chooser = Callable[[Sequence[tuple[Rule, Atom]]], tuple[Rule, Atom]]


def construct_stable_explanation(program: Program, interp: Interpretation,
                                 chooser: Chooser | None = None) -> Explanation:
    """Build one explanation of a stable model constructively: repeatedly fire
    a reduct rule whose body already holds but whose head does not, labelling
    one of its true head atoms.  Minimality of ``interp`` guarantees the loop
    covers the whole model.

    ``chooser`` resolves the pick among the candidate (rule, head atom) pairs,
    presented sorted by (label id, atom name); the default takes the first.
    """
    if not is_stable(program, interp):
        raise NotStableError(interp)
    red = reduct(program, interp)
    derived: set[Atom] = set()
    labelling: dict[Atom, Label] = {}
    edges: set[tuple[Atom, Atom]] = set()
    for _ in range(len(interp)):
        state = frozenset(derived)
        pending = [r for r in red.rules
                   if r.head and satisfies_body(state, r) and r.head_set.isdisjoint(state)]
        if not pending:
            break
        options = sorted(((r, p) for r in pending for p in r.head_set & interp),
                         key=lambda pair: (pair[0].label.id, pair[1].name))
        pick = options[0] if chooser is None else chooser(options)
        if pick not in options:
            raise ValueError("chooser returned a pair outside the offered options")
        rule, atom = pick
        derived.add(atom)
        labelling[atom] = rule.label
        edges.update((q, atom) for q in rule.pos_body)
    assert derived == set(interp), "stable construction must cover the model"
    return Explanation(interp, labelling, frozenset(edges), True)


@dataclass(frozen=True)
class ModelSummary:
    model: Interpretation
    stable: bool
    justified: bool
    supported: bool
    explanation_count: int

    @property
    def category(self) -> str:
        if self.stable:
            return "stable"
        if self.justified:
            return "justified"
        if self.supported:
            return "supported"
        return "classical"


@dataclass(frozen=True)
class ModelReport:
    entries: tuple[ModelSummary, ...]

    def _models(self, pred) -> list[Interpretation]:
        return [e.model for e in self.entries if pred(e)]

    @property
    def classical_models(self) -> list[Interpretation]:
        return [e.model for e in self.entries]

    @property
    def stable_models(self) -> list[Interpretation]:
        return self._models(lambda e: e.stable)

    @property
    def justified_models(self) -> list[Interpretation]:
        return self._models(lambda e: e.justified)

    @property
    def supported_models(self) -> list[Interpretation]:
        return self._models(lambda e: e.supported)

    def explanation_counts(self) -> dict[Interpretation, int]:
        return {e.model: e.explanation_count for e in self.entries}


def classify_models(program: Program, cap: int | None = None) -> ModelReport:
    """Partition all classical models into stable / justified / supported /
    merely classical, with explanation counts."""
    entries = []
    for interp in enumerate_models(program, cap):
        explanations = enumerate_explanations(program, interp)
        entries.append(ModelSummary(
            model=interp,
            stable=is_stable(program, interp),
            justified=bool(explanations),
            supported=is_supported(program, interp),
            explanation_count=len(explanations),
        ))
    entries.sort(key=lambda e: model_sort_key(e.model))
    return ModelReport(tuple(entries))
