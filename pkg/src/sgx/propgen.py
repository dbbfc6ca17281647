"""Seeded random programs and the brute-force oracle behind the property suite.

Every check here recomputes the model classes from first principles (subset
enumeration, definitional minimality, per-atom support search) and asserts the
relationships they must satisfy: the stable/justified/supported chain, the
collapse of stable and justified models without disjunction, the fixpoint
characterisation of supported models, the Horn least model, invariance of
explanations under the reduct and the encoding bijection.  Failures are
shrunk by greedy rule removal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Atom, Interpretation, Label, Program, Rule, format_interpretation, validate_program
from .encoding import crosscheck_bijection
from .explain import (
    construct_stable_explanation,
    enumerate_explanations,
    is_justified,
    is_supported,
    validate_explanation,
)
from .semantics import (
    _stable_bruteforce,
    enumerate_models,
    enumerate_stable,
    horn_least_model,
    reduct,
    tp_step,
)

MAX_ATOMS = 8
MAX_RULES = 12


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n_atoms: int = 4
    n_rules: int = 6
    max_head: int = 2
    max_body: int = 3
    p_neg: float = 0.4
    p_dneg: float = 0.15
    p_constraint: float = 0.1

    def __post_init__(self):
        if not 1 <= self.n_atoms <= MAX_ATOMS:
            raise ValueError(f"n_atoms must be in 1..{MAX_ATOMS}")
        if not 0 <= self.n_rules <= MAX_RULES:
            raise ValueError(f"n_rules must be in 0..{MAX_RULES}")
        if self.max_head < 1 or self.max_body < 0:
            raise ValueError("max_head must be >= 1 and max_body >= 0")
        for name in ("p_neg", "p_dneg", "p_constraint"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


def random_program(config: GenConfig) -> Program:
    """Deterministic in the seed: labels r1..rN over atoms a1..aM."""
    rng = random.Random(config.seed)
    atoms = [Atom(f"a{i}") for i in range(1, config.n_atoms + 1)]
    rules = []
    for index in range(1, config.n_rules + 1):
        if rng.random() < config.p_constraint:
            head: tuple[Atom, ...] = ()
        else:
            head_size = rng.randint(1, min(config.max_head, len(atoms)))
            head = tuple(rng.sample(atoms, head_size))
        pos = tuple(rng.sample(atoms, rng.randint(0, min(config.max_body, len(atoms)))))
        neg = tuple(a for a in rng.sample(atoms, min(config.max_body, len(atoms)))
                    if rng.random() < config.p_neg)
        dneg = tuple(a for a in rng.sample(atoms, min(config.max_body, len(atoms)))
                     if rng.random() < config.p_dneg)
        rules.append(Rule(Label(f"r{index}"), head, pos, neg, dneg))
    return validate_program(rules)


@dataclass(frozen=True)
class OracleReport:
    program: Program
    classical: tuple[Interpretation, ...]
    stable: tuple[Interpretation, ...]
    justified: tuple[Interpretation, ...]
    supported: tuple[Interpretation, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def oracle_check(program: Program, *, cap: int | None = None,
                 check_bijection: bool = True) -> OracleReport:
    """Recompute every model class by brute force and flag any violated
    relationship between them."""
    violations: list[str] = []

    def fail(message: str, interp: Interpretation | None = None) -> None:
        where = f" at model {{{format_interpretation(interp)}}}" if interp is not None else ""
        violations.append(message + where)

    classical = enumerate_models(program, cap)
    stable = enumerate_stable(program, cap)
    justified = [i for i in classical if is_justified(program, i)]
    supported = [i for i in classical if is_supported(program, i)]

    if stable != _stable_bruteforce(program, cap):
        fail("split-search and subset-enumeration stable models disagree")

    for interp in stable:
        if interp not in justified:
            fail("stable model is not justified", interp)
    for interp in justified:
        if interp not in supported:
            fail("justified model is not supported", interp)

    if program.non_disjunctive:
        if set(stable) != set(justified):
            fail("stable and justified models differ on a non-disjunctive program")
        # Supported models are defined over classical models only; a bare
        # constraint can make a non-model a vacuous fixpoint.
        fixpoints = [i for i in classical if tp_step(program, i) == i]
        if set(fixpoints) != set(supported):
            fail("consequence-operator fixpoints differ from the supported models")

    if program.horn:
        least = horn_least_model(program)
        if least is None:
            if stable:
                fail("inconsistent Horn program has a stable model")
        else:
            if set(justified) != {least}:
                fail("Horn program's justified models are not exactly its least model")
            if set(stable) != {least}:
                fail("Horn program's stable models are not exactly its least model")

    for interp in classical:
        under_program = enumerate_explanations(program, interp)
        under_reduct = enumerate_explanations(reduct(program, interp), interp)
        if under_program != under_reduct:
            fail("explanations differ between the program and its reduct", interp)
        for explanation in under_program:
            if not validate_explanation(program, interp, explanation):
                fail("enumerated explanation fails validation", interp)

    for interp in stable:
        if not enumerate_explanations(program, interp, limit=1):
            fail("stable model has no explanation", interp)
            continue
        constructed = construct_stable_explanation(program, interp)
        if not validate_explanation(program, interp, constructed):
            fail("constructively built explanation fails validation", interp)
        if check_bijection:
            report = crosscheck_bijection(program, interp)
            if not report.ok:
                fail(f"encoding bijection failed "
                     f"({report.explanation_count} explanations vs "
                     f"{report.answer_set_count} answer sets)", interp)

    return OracleReport(
        program=program,
        classical=tuple(classical),
        stable=tuple(stable),
        justified=tuple(justified),
        supported=tuple(supported),
        violations=tuple(violations),
    )


def shrink_failure(program: Program, *, failing=None, cap: int | None = None,
                   check_bijection: bool = True) -> Program:
    """Greedily drop rules while ``failing`` (by default: the oracle reports a
    violation) still holds; dropping a rule always leaves a valid program."""
    if failing is None:
        def failing(candidate: Program) -> bool:
            return not oracle_check(candidate, cap=cap,
                                    check_bijection=check_bijection).ok
    current = program
    changed = True
    while changed:
        changed = False
        for index in range(len(current.rules)):
            candidate = validate_program(current.rules[:index] + current.rules[index + 1:])
            if failing(candidate):
                current = candidate
                changed = True
                break
    return current


@dataclass(frozen=True)
class FuzzFailure:
    case_seed: int
    program: Program
    shrunk: Program
    violations: tuple[str, ...]


@dataclass(frozen=True)
class FuzzReport:
    cases: int
    failures: tuple[FuzzFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def run_fuzz(seed: int, cases: int, *, n_atoms: int = 5, n_rules: int = 7,
             check_bijection: bool = True) -> FuzzReport:
    """Run the oracle over ``cases`` random programs drawn deterministically
    from ``seed``, with per-case shape variation within the given bounds."""
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        config = GenConfig(
            seed=rng.getrandbits(48),
            n_atoms=rng.randint(2, n_atoms),
            n_rules=rng.randint(1, n_rules),
            max_head=rng.choice((1, 2, 3)),
            max_body=rng.randint(1, 3),
        )
        program = random_program(config)
        report = oracle_check(program, check_bijection=check_bijection)
        if not report.ok:
            shrunk = shrink_failure(program, check_bijection=check_bijection)
            failures.append(FuzzFailure(config.seed, program, shrunk, report.violations))
    return FuzzReport(cases, tuple(failures))
