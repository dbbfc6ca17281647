"""Meta-encoding whose answer sets are the explanations of a stable model.

:func:`emit_program_encoding` prints the non-ground encoding in mainstream ASP
surface syntax, to be grounded externally against `as/1` facts for the model.
:func:`ground_encoding` builds the equivalent ground program directly in our
own rule format, with choices realised through double negation and the `as`
and `sup` atoms pre-evaluated away, so the internal stable-model engine can
solve it.  :func:`crosscheck_bijection` matches those answer sets one-to-one
against the directly enumerated explanations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .core import (
    Atom,
    Explanation,
    Interpretation,
    Label,
    Program,
    Rule,
    SgxError,
    validate_program,
)
from .explain import NotStableError, enumerate_explanations, validate_explanation
from .semantics import enumerate_stable, is_stable, satisfies_body

#: Reified signatures routinely exceed the plain-enumeration default; the
#: split search handles this encoding shape well past it.
ENCODING_CAP = 64


class EncodingError(SgxError):
    pass


def _check_names(program: Program) -> None:
    # Reified names join label and atom with "__"; a source name containing
    # it would make the flattening ambiguous.
    for rule in program.rules:
        if "__" in rule.label.id:
            raise EncodingError(f"label {rule.label.id!r} contains '__', "
                                "which the reified naming scheme reserves")
        for atom in rule.atoms():
            if "__" in atom.name:
                raise EncodingError(f"atom {atom.name!r} contains '__', "
                                    "which the reified naming scheme reserves")


def fired_atom(label: Label, atom: Atom) -> Atom:
    """The propositional stand-in for f(label, atom)."""
    return Atom(f"f__{label.id}__{atom.name}")


def derived_atom(atom: Atom) -> Atom:
    """The propositional stand-in for f(atom)."""
    return Atom(f"f__{atom.name}")


@dataclass(frozen=True)
class GroundEncoding:
    """The ground explanation program for one model, plus the mapping from
    its reified atoms back to their origins."""

    program: Program
    fired_origins: Mapping[Atom, tuple[Label, Atom]]
    derived_origins: Mapping[Atom, Atom]

    def labelling_of(self, answer_set: Interpretation) -> dict[Atom, Label]:
        """Extract the atom -> label assignment an answer set encodes."""
        out: dict[Atom, Label] = {}
        for reified in answer_set:
            origin = self.fired_origins.get(reified)
            if origin is not None:
                label, atom = origin
                out[atom] = label
        return out


def eligible_pairs(program: Program, interp: Interpretation) -> list[tuple[Rule, Atom]]:
    """The (rule, head atom) pairs that may fire: body true under the model
    and the head atom in it.  Program order, then head order."""
    return [(r, p) for r in program.rules if satisfies_body(interp, r)
            for p in r.head if p in interp]


def ground_encoding(program: Program, interp: Interpretation, *,
                    force: bool = False) -> GroundEncoding:
    """Instantiate the encoding for ``interp``, which must be stable unless
    ``force`` allows any classical model for experimentation.  Rules get fresh
    labels x_1, x_2, ... in emission order."""
    if not force and not is_stable(program, interp):
        raise NotStableError(interp)
    _check_names(program)
    pairs = eligible_pairs(program, interp)
    fired_origins: dict[Atom, tuple[Label, Atom]] = {}
    for rule, atom in pairs:
        fired_origins[fired_atom(rule.label, atom)] = (rule.label, atom)
    derived_origins = {derived_atom(a): a for a in sorted(interp)}

    rules: list[Rule] = []

    def fresh() -> Label:
        return Label(f"x_{len(rules) + 1}")

    # One choice per eligible pair: f(l,p) <- f(q1) .. f(qn), not not f(l,p).
    for rule, atom in pairs:
        target = fired_atom(rule.label, atom)
        rules.append(Rule(fresh(), (target,),
                          tuple(derived_atom(q) for q in rule.pos_body),
                          (), (target,)))
    # A rule may fire for at most one of its head atoms.
    seen_rules: list[Rule] = []
    for rule, _ in pairs:
        if rule not in seen_rules:
            seen_rules.append(rule)
    for rule in seen_rules:
        fired_here = [fired_atom(rule.label, p) for p in rule.head
                      if fired_atom(rule.label, p) in fired_origins]
        for left, right in combinations(fired_here, 2):
            rules.append(Rule(fresh(), (), (left, right)))
    # Deriving an atom means some rule fired for it.
    for atom in sorted(interp):
        for rule, p in pairs:
            if p == atom:
                rules.append(Rule(fresh(), (derived_atom(atom),),
                                  (fired_atom(rule.label, atom),)))
    # Every model atom must be derived.
    for atom in sorted(interp):
        rules.append(Rule(fresh(), (), (), (derived_atom(atom),)))
    # No atom may be fired by two different rules.
    for atom in sorted(interp):
        fired_here = [fired_atom(r.label, p) for r, p in pairs if p == atom]
        for left, right in combinations(fired_here, 2):
            rules.append(Rule(fresh(), (), (left, right)))

    return GroundEncoding(validate_program(rules), fired_origins, derived_origins)


def answer_sets_of_encoding(program: Program, interp: Interpretation, *,
                            force: bool = False,
                            cap: int | None = None) -> list[Interpretation]:
    """Answer sets of the ground encoding, over reified atoms."""
    encoding = ground_encoding(program, interp, force=force)
    return enumerate_stable(encoding.program, cap=ENCODING_CAP if cap is None else cap)


def emit_program_encoding(program: Program) -> str:
    """The non-ground encoding in solver syntax.  Per source rule and head
    atom: a `sup(l)` support rule over `as/1` literals and a guarded choice
    `{f(l,p)}`; per head-atom pair a mutual-exclusion constraint; plus the
    three generic rules tying `f/2`, `f/1` and `as/1` together."""
    lines: list[str] = []
    for rule in program.rules:
        lab = rule.label.id
        for p in rule.head:
            sup_body = ([f"as({q.name})" for q in rule.pos_body]
                        + [f"as({p.name})"]
                        + [f"not as({s.name})" for s in rule.neg_body]
                        + [f"not not as({t.name})" for t in rule.dneg_body])
            lines.append(f"sup({lab}) :- {', '.join(sup_body)}.")
        for p in rule.head:
            choice_body = ([f"f({q.name})" for q in rule.pos_body]
                           + [f"as({p.name})", f"sup({lab})"])
            lines.append(f"{{ f({lab},{p.name}) }} :- {', '.join(choice_body)}.")
        for left, right in combinations(rule.head, 2):
            lines.append(f":- f({lab},{left.name}), f({lab},{right.name}).")
    lines.append("f(A) :- f(L,A), as(A).")
    lines.append(":- not f(A), as(A).")
    lines.append(":- f(L,A), f(L2,A), L != L2, as(A).")
    return "\n".join(lines) + "\n"


def model_facts(interp: Interpretation) -> str:
    """The `as/1` facts naming the model to be explained."""
    return "".join(f"as({a.name}).\n" for a in sorted(interp))


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of matching answer sets of the encoding against directly
    enumerated explanations, keyed by the (atom, label) assignment."""

    model: Interpretation
    explanation_count: int
    answer_set_count: int
    matched: int
    unmatched_explanations: tuple[frozenset[tuple[str, str]], ...]
    unmatched_answer_sets: tuple[frozenset[tuple[str, str]], ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (self.explanation_count == self.answer_set_count
                and not self.unmatched_explanations
                and not self.unmatched_answer_sets
                and not self.violations)


def _labelling_key(labelling: Mapping[Atom, Label]) -> frozenset[tuple[str, str]]:
    return frozenset((a.name, l.id) for a, l in labelling.items())


def crosscheck_bijection(program: Program, interp: Interpretation, *,
                         cap: int | None = None) -> BijectionReport:
    """Check soundness and completeness of the encoding on one stable model:
    every answer set must induce a valid explanation and every explanation
    must appear as exactly one answer set."""
    explanations = enumerate_explanations(program, interp)
    encoding = ground_encoding(program, interp)
    answer_sets = enumerate_stable(encoding.program,
                                   cap=ENCODING_CAP if cap is None else cap)
    violations: list[str] = []
    explanation_keys = {_labelling_key(e.labelling) for e in explanations}
    answer_keys: list[frozenset[tuple[str, str]]] = []
    for answer in answer_sets:
        derived = frozenset(encoding.derived_origins[a] for a in answer
                            if a in encoding.derived_origins)
        if derived != interp:
            violations.append(f"answer set derives {sorted(a.name for a in derived)} "
                              "instead of the model")
        labelling = encoding.labelling_of(answer)
        fired = [encoding.fired_origins[a] for a in answer if a in encoding.fired_origins]
        if len(fired) != len(labelling) or len({l for l, _ in fired}) != len(fired):
            violations.append("answer set fires some rule or atom twice")
        induced = Explanation.from_labelling(program, interp, labelling)
        if not validate_explanation(program, interp, induced):
            violations.append(f"answer set induces an invalid explanation "
                              f"{sorted((a.name, l.id) for a, l in labelling.items())}")
        answer_keys.append(_labelling_key(labelling))
    if len(set(answer_keys)) != len(answer_keys):
        violations.append("two answer sets encode the same labelling")
    answer_key_set = set(answer_keys)
    return BijectionReport(
        model=interp,
        explanation_count=len(explanations),
        answer_set_count=len(answer_sets),
        matched=len(explanation_keys & answer_key_set),
        unmatched_explanations=tuple(sorted(explanation_keys - answer_key_set,
                                            key=sorted)),
        unmatched_answer_sets=tuple(sorted(answer_key_set - explanation_keys,
                                           key=sorted)),
        violations=tuple(violations),
    )
