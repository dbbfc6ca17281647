"""Acceptance suite: one test per criterion, each timed at its stated bound
and printing a pass line (visible with `pytest -s` or `-v`)."""

import time
from itertools import product

from sgx import (
    Atom,
    Label,
    answer_sets_of_encoding,
    build_proof,
    crosscheck_bijection,
    enumerate_explanations,
    enumerate_models,
    enumerate_stable,
    enumerate_support_graphs,
    interpretation,
    is_justified,
    is_supported,
    run_fuzz,
)
from sgx.core import format_interpretation

from util import FIXTURES, edge_names, labelling_names, load_fixture, run_cli, squads


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def report(criterion, timer, bound):
    assert timer.elapsed < bound, f"criterion {criterion} took {timer.elapsed:.2f}s"
    print(f"criterion {criterion}: PASS ({timer.elapsed:.2f}s < {bound}s)")


def test_criterion_1_example1():
    program = load_fixture("ex1.lp")
    with Timer() as timer:
        models = enumerate_models(program)
        without_c = [m for m in models if Atom("c") not in m]
        assert {format_interpretation(m) for m in without_c} == {"b", "a d", "b d", "a b d"}
        justified = [m for m in models if is_justified(program, m)]
        assert {format_interpretation(m) for m in justified} == {"b", "a d"}
        explanations = enumerate_explanations(program, interpretation("a", "d"))
        assert len(explanations) == 2
        assert labelling_names(explanations[0]) == {"a": "l1", "d": "l2"}
        assert edge_names(explanations[0]) == {("a", "d")}
        assert labelling_names(explanations[1]) == {"a": "l1", "d": "l3"}
        assert edge_names(explanations[1]) == set()
        assert enumerate_explanations(program, interpretation("b", "d")) == []
        assert enumerate_explanations(program, interpretation("a", "b", "d")) == []
    report(1, timer, 1.0)


def test_criterion_2_example2_fig1():
    program = load_fixture("ex2.lp")
    with Timer() as timer:
        model = interpretation("p", "q", "r")
        justified = [m for m in enumerate_models(program) if is_justified(program, m)]
        assert justified == [model]
        explanations = enumerate_explanations(program, model)
        assert len(explanations) == 1
        assert edge_names(explanations[0]) == {("p", "q"), ("p", "r"), ("q", "r")}
        proof = build_proof(explanations[0], Atom("r"))
        assert (proof.atom, proof.label) == (Atom("r"), Label("l3"))
        assert [t.atom.name for t in proof.premises] == ["p", "q"]
        embedded = [t for t in proof.premises[1].premises if t.atom == Atom("p")]
        assert embedded[0] == proof.premises[0]
    report(2, timer, 1.0)


def test_criterion_3_disjunctive_counterexample():
    program = load_fixture("disj.lp")
    with Timer() as timer:
        models = enumerate_models(program)
        assert len(models) == 5
        counts = {format_interpretation(m): len(enumerate_explanations(program, m))
                  for m in models}
        assert counts == {"a": 2, "a b": 1, "a c": 1, "b c": 1, "a b c": 0}
        stable = enumerate_stable(program)
        assert {format_interpretation(m) for m in stable} == {"a", "b c"}
        justified = {m for m in models if is_justified(program, m)}
        assert not justified <= set(stable)  # JM ⊄ SM witnessed
    report(3, timer, 1.0)


def test_criterion_4_firing_squads():
    with Timer() as timer:
        for n in range(1, 6):
            program = squads(n)
            stable = enumerate_stable(program)
            assert len(stable) == 1
            assert len(stable[0]) == 3 * n + 1
            assert len(enumerate_explanations(program, stable[0])) == 2 ** n
            bijection = crosscheck_bijection(program, stable[0])
            assert bijection.ok and bijection.matched == 2 ** n
    report(4, timer, 10.0)


def test_criterion_5_supported_not_justified():
    program = load_fixture("suppnotjust.lp")
    with Timer() as timer:
        models = enumerate_models(program)
        supported = {m for m in models if is_supported(program, m)}
        assert supported == {interpretation(), interpretation("b", "c")}
        justified = {m for m in models if is_justified(program, m)}
        assert justified == {interpretation()}
        assert set(enumerate_stable(program)) == {interpretation()}
        graphs = enumerate_support_graphs(program, interpretation("b", "c"))
        assert len(graphs) == 1
        assert labelling_names(graphs[0]) == {"b": "l1", "c": "l2"}
        assert not graphs[0].acyclic
    report(5, timer, 1.0)


def test_criterion_6_switch_light():
    program = load_fixture("switch.lp")
    with Timer() as timer:
        model = interpretation("switch", "light")
        assert enumerate_stable(program) == [model]
        explanations = enumerate_explanations(program, model)
        assert len(explanations) == 1
        assert labelling_names(explanations[0]) == {"switch": "l1", "light": "l2"}
        assert edge_names(explanations[0]) == {("switch", "light")}
        encoded = run_cli("encode", str(FIXTURES / "switch.lp"),
                          "--model", "switch,light")
        assert encoded.returncode == 0 and "as(switch)." in encoded.stdout
        answers = answer_sets_of_encoding(program, model)
        assert len(answers) == 1
        assert {Atom("f__l1__switch"), Atom("f__l2__light")} <= answers[0]
    report(6, timer, 1.0)


def test_criterion_7_property_suite():
    with Timer() as timer:
        fuzz = run_fuzz(seed=2026, cases=300, n_atoms=5, n_rules=7)
        assert fuzz.cases == 300
        assert fuzz.failures == (), fuzz.failures
    report(7, timer, 60.0)


DETERMINISM_COMMANDS = [
    ("models", "{file}"),
    ("models", "{file}", "--format", "json"),
    ("stable", "{file}"),
    ("supported", "{file}"),
    ("justified", "{file}", "--format", "json"),
]

PER_FIXTURE_COMMANDS = {
    "ex1.lp": [("explain", "{file}", "--model", "a,d"),
               ("explain", "{file}", "--model", "a,d", "--format", "json"),
               ("explain", "{file}", "--model", "a,d", "--format", "dot"),
               ("prove", "{file}", "--model", "a,d", "--atom", "d"),
               ("encode", "{file}", "--model", "a,d", "--ground"),
               ("verify", "{file}")],
    "ex2.lp": [("explain", "{file}", "--model", "p,q,r"),
               ("prove", "{file}", "--model", "p,q,r", "--atom", "r",
                "--format", "json"),
               ("verify", "{file}")],
    "disj.lp": [("explain", "{file}", "--model", "a", "--format", "dot")],
    "headcycle.lp": [("explain", "{file}", "--model", "p,q")],
    "suppnotjust.lp": [("explain", "{file}", "--model", "")],
    "switch.lp": [("encode", "{file}", "--model", "switch,light"),
                  ("prove", "{file}", "--model", "switch,light", "--atom", "light")],
    "squads3.lp": [("verify", "{file}")],
    "empty.lp": [],
}

FIXTURE_NAMES = ["ex1.lp", "ex2.lp", "disj.lp", "headcycle.lp",
                 "suppnotjust.lp", "switch.lp", "squads3.lp", "empty.lp"]


def test_criterion_8_byte_determinism(tmp_path):
    with Timer() as timer:
        invocations = [
            tuple(part.format(file=str(FIXTURES / name)) for part in command)
            for name, commands in product(FIXTURE_NAMES, [DETERMINISM_COMMANDS])
            for command in commands
        ]
        for name, commands in PER_FIXTURE_COMMANDS.items():
            invocations += [
                tuple(part.format(file=str(FIXTURES / name)) for part in command)
                for command in commands
            ]
        invocations.append(("fuzz", "--seed", "3", "--cases", "10"))
        for argv in invocations:
            first = run_cli(*argv, cwd=tmp_path, binary=True)
            second = run_cli(*argv, cwd=tmp_path, binary=True)
            assert first.stdout == second.stdout, argv
            assert first.stderr == second.stderr, argv
            assert first.returncode == second.returncode, argv
    print(f"criterion 8: PASS ({timer.elapsed:.2f}s, {len(invocations)} commands x2)")
