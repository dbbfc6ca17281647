"""Classical satisfaction, model enumeration, reduct, support and stable models.

Double negation is evaluated classically here (`not not t` holds iff `t` does);
its nonmonotonic effect lives entirely in :func:`reduct`.  Enumeration over a
signature is guarded by a hard cap so the brute-force paths cannot hang.

Stable models of non-disjunctive programs are found by splitting on the atoms
that occur under negation: the reduct depends only on that part of a candidate
interpretation, so each consistent split is checked via the least model of the
resulting Horn reduct.  Sound pruning bounds (a superset closure ignoring
undecided negations and a subset closure assuming them) keep the search small.
Disjunctive programs fall back to subset enumeration with an explicit
minimality check against the reduct.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .core import (
    Atom,
    Interpretation,
    Program,
    Rule,
    SgxError,
    model_sort_key,
    validate_program,
)

DEFAULT_CAP = 22


class SignatureTooLargeError(SgxError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"signature has {size} atoms, above the cap of {cap}")


class DisjunctiveProgramError(SgxError):
    def __init__(self, rule: Rule):
        self.rule = rule
        super().__init__(f"rule {rule.label.id!r} has a disjunctive head")


def _check_cap(program: Program, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if len(program.signature) > limit:
        raise SignatureTooLargeError(len(program.signature), limit)


def satisfies_body(interp: Interpretation, rule: Rule) -> bool:
    """Classical truth of the rule body: positive and doubly-negated atoms
    must hold, singly-negated atoms must not."""
    return (rule.pos_set <= interp
            and rule.neg_set.isdisjoint(interp)
            and rule.dneg_set <= interp)


def is_model(interp: Interpretation, program: Program) -> bool:
    """True iff every rule holds as a material implication (a constraint
    holds iff its body is false)."""
    for rule in program.rules:
        if satisfies_body(interp, rule) and rule.head_set.isdisjoint(interp):
            return False
    return True


def enumerate_models(program: Program, cap: int | None = None) -> list[Interpretation]:
    """All classical models, by cardinality then lexicographically by names."""
    _check_cap(program, cap)
    out = []
    atoms = program.sorted_signature
    for size in range(len(atoms) + 1):
        for combo in combinations(atoms, size):
            candidate = frozenset(combo)
            if is_model(candidate, program):
                out.append(candidate)
    return out


def reduct(program: Program, interp: Interpretation) -> Program:
    """Keep each rule whose negative body part holds in ``interp``, stripped
    to its positive part; labels are preserved."""
    return validate_program(
        r.positive_part() for r in program.rules
        if r.neg_set.isdisjoint(interp) and r.dneg_set <= interp)


def support(interp: Interpretation, program: Program, atom: Atom) -> tuple[Rule, ...]:
    """Rules with ``atom`` in the head whose body is true under ``interp``,
    in program order."""
    return tuple(r for r in program.rules
                 if atom in r.head_set and satisfies_body(interp, r))


def tp_step(program: Program, interp: Interpretation) -> Interpretation:
    """One application of the immediate-consequences operator (heads of rules
    with a true body).  Defined for non-disjunctive programs only."""
    for rule in program.rules:
        if rule.is_disjunctive:
            raise DisjunctiveProgramError(rule)
    return frozenset(r.head[0] for r in program.rules
                     if r.head and satisfies_body(interp, r))


def _definite_lfp(rules: Sequence[Rule]) -> set[Atom]:
    # Least model of the definite (non-constraint) part of a Horn rule set,
    # looking only at positive bodies.
    derived: set[Atom] = set()
    pending = [r for r in rules if r.head]
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if rule.pos_set <= derived:
                if rule.head[0] not in derived:
                    derived.add(rule.head[0])
                    changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return derived


def horn_least_model(program: Program) -> Interpretation | None:
    """Least model of a Horn program, or None if a constraint rejects it
    (the program is then inconsistent)."""
    if not program.horn:
        raise ValueError("least models are defined for Horn programs only")
    least = frozenset(_definite_lfp(program.rules))
    if not is_model(least, program):
        return None
    return least


def _minimal_over_subsets(red: Program, interp: Interpretation) -> bool:
    # Minimality needs only candidates below interp: a smaller model of the
    # reduct must be one of its proper subsets.
    atoms = sorted(interp)
    for size in range(len(atoms)):
        for combo in combinations(atoms, size):
            if is_model(frozenset(combo), red):
                return False
    return True


def is_stable(program: Program, interp: Interpretation) -> bool:
    """True iff ``interp`` is a minimal model of its own reduct."""
    red = reduct(program, interp)
    if not is_model(interp, red):
        return False
    if program.non_disjunctive:
        # The reduct is Horn; its least model is below interp and satisfies
        # the reduct's constraints whenever interp does, so minimality is
        # exactly equality with that least model.
        return interp == frozenset(_definite_lfp(red.rules))
    return _minimal_over_subsets(red, interp)


def _stable_bruteforce(program: Program, cap: int | None = None) -> list[Interpretation]:
    out = []
    for interp in enumerate_models(program, cap):
        red = reduct(program, interp)
        if _minimal_over_subsets(red, interp):
            out.append(interp)
    return out


def _stable_split_search(program: Program) -> list[Interpretation]:
    # Stable models of a non-disjunctive program, by branching over the atoms
    # occurring under (double) negation.  A candidate assignment of those
    # atoms fixes the reduct; the least model of its definite part is the only
    # possible stable model for that branch, accepted when it reproduces the
    # assignment and respects the reduct's constraints.
    rules = program.rules
    definite = [r for r in rules if r.head]
    constraints = [r for r in rules if not r.head]
    nb_atoms = sorted({a for r in rules for a in r.neg_body}
                      | {a for r in rules for a in r.dneg_body})
    nb_set = frozenset(nb_atoms)
    results: list[Interpretation] = []

    def closure_upper(true_set: frozenset[Atom], false_set: frozenset[Atom]) -> set[Atom]:
        # Superset of every reachable least model below this branch: keep any
        # rule whose negative part could still hold for some completion.
        return _definite_lfp([r for r in definite
                              if r.neg_set.isdisjoint(true_set)
                              and r.dneg_set.isdisjoint(false_set)])

    def closure_lower(true_set: frozenset[Atom], false_set: frozenset[Atom]) -> set[Atom]:
        # Subset of every reachable least model: keep only rules whose
        # negative part holds for every completion.
        return _definite_lfp([r for r in definite
                              if r.neg_set <= false_set and r.dneg_set <= true_set])

    def search(true_set: frozenset[Atom], false_set: frozenset[Atom],
               undecided: tuple[Atom, ...]) -> None:
        while True:
            upper = closure_upper(true_set, false_set)
            if not true_set <= upper:
                return
            lower = closure_lower(true_set, false_set)
            if not false_set.isdisjoint(lower):
                return
            must = true_set | lower
            for c in constraints:
                if c.neg_set <= false_set and c.dneg_set <= true_set and c.pos_set <= must:
                    return
            forced_true = frozenset(u for u in undecided if u in lower)
            forced_false = frozenset(u for u in undecided if u not in upper)
            if not forced_true and not forced_false:
                break
            true_set |= forced_true
            false_set |= forced_false
            undecided = tuple(u for u in undecided
                              if u not in forced_true and u not in forced_false)
        if not undecided:
            chosen = true_set
            red = [r for r in rules
                   if r.neg_set.isdisjoint(chosen) and r.dneg_set <= chosen]
            least = frozenset(_definite_lfp([r for r in red if r.head]))
            if least & nb_set != chosen:
                return
            for c in red:
                if not c.head and c.pos_set <= least:
                    return
            results.append(least)
            return
        pivot, rest = undecided[0], undecided[1:]
        search(true_set | {pivot}, false_set, rest)
        search(true_set, false_set | {pivot}, rest)

    search(frozenset(), frozenset(), tuple(nb_atoms))
    results.sort(key=model_sort_key)
    return results


def enumerate_stable(program: Program, cap: int | None = None) -> list[Interpretation]:
    """All stable models, by cardinality then lexicographically by names.
    Labels are irrelevant here."""
    _check_cap(program, cap)
    if program.non_disjunctive:
        return _stable_split_search(program)
    return _stable_bruteforce(program, cap)
