import pytest

from sgx import (
    Atom,
    DuplicateAtomError,
    DuplicateLabelError,
    Explanation,
    Label,
    Rule,
    classify,
    enumerate_explanations,
    enumerate_models,
    interpretation,
    parse_program,
    validate_program,
)
from sgx.core import format_interpretation, is_acyclic, model_sort_key


def test_atom_token_grammar():
    assert Atom("a").name == "a"
    assert Atom("fireA_0").name == "fireA_0"
    for bad in ("", "A", "1a", "a b", "a-b", "_x"):
        with pytest.raises(ValueError):
            Atom(bad)


def test_label_token_grammar_and_separate_namespace():
    assert Label("l1").id == "l1"
    with pytest.raises(ValueError):
        Label("L1")
    # the label l1 and an atom l1 may coexist
    program = parse_program("l1: l1.")
    assert program.rules[0].label == Label("l1")
    assert program.rules[0].head == (Atom("l1"),)


def test_rule_flags():
    fact = Rule(Label("l1"), (Atom("a"),))
    assert fact.is_fact and not fact.is_constraint and not fact.is_disjunctive
    constraint = Rule(Label("l2"), (), (Atom("a"),))
    assert constraint.is_constraint and not constraint.is_fact
    disjunctive = Rule(Label("l3"), (Atom("a"), Atom("b")))
    assert disjunctive.is_disjunctive
    choice_like = Rule(Label("l4"), (Atom("p"),), dneg_body=(Atom("p"),))
    assert not choice_like.is_positive and not choice_like.is_fact


def test_rule_rejects_duplicate_atom_in_field():
    with pytest.raises(DuplicateAtomError):
        Rule(Label("l1"), (Atom("a"), Atom("a")))
    with pytest.raises(DuplicateAtomError):
        Rule(Label("l1"), (Atom("a"),), (Atom("b"), Atom("b")))
    # the same atom may occur in different fields
    Rule(Label("l1"), (Atom("a"),), (Atom("a"),))


def test_positive_part_strips_negation():
    rule = parse_program("l2: d :- a, not c, not not e.").rules[0]
    positive = rule.positive_part()
    assert positive.label == rule.label
    assert positive.head == rule.head
    assert positive.pos_body == (Atom("a"),)
    assert positive.neg_body == () and positive.dneg_body == ()


def test_validate_program_signature(ex1):
    assert ex1.signature == interpretation("a", "b", "c", "d")
    assert validate_program([]).signature == frozenset()


def test_validate_program_rejects_duplicate_labels():
    rules = [Rule(Label("l1"), (Atom("a"),)), Rule(Label("l1"), (Atom("b"),))]
    with pytest.raises(DuplicateLabelError):
        validate_program(rules)


def test_label_lookup_is_a_bijection(ex1, switch):
    for program in (ex1, switch):
        assert len(program.by_label) == len(program.rules)
        for rule in program.rules:
            assert program.rule(rule.label) is rule


def test_validate_program_round_trip(ex1, ex2, disj, suppnotjust, switch):
    for program in (ex1, ex2, disj, suppnotjust, switch):
        assert validate_program(program.rules) == program


def test_classify(ex1, ex2):
    flags = classify(ex1)
    assert (flags.positive, flags.non_disjunctive, flags.horn) == (False, False, False)
    assert classify(ex2).horn
    # a single positive constraint is still Horn
    assert classify(parse_program("l1: #false :- a.")).horn
    assert not classify(parse_program("l1: a ; b.")).non_disjunctive
    assert not classify(parse_program("l1: a :- not b.")).positive


def test_explanation_edges_reconstructible(ex1, ex2, headcycle, disj):
    for program in (ex1, ex2, headcycle, disj):
        for model in enumerate_models(program):
            for explanation in enumerate_explanations(program, model):
                rebuilt = Explanation.from_labelling(program, model, explanation.labelling)
                assert rebuilt == explanation


def test_model_sort_key_orders_by_size_then_names():
    models = [interpretation("b", "c"), interpretation("a", "d"),
              interpretation("b"), interpretation()]
    ordered = sorted(models, key=model_sort_key)
    assert [format_interpretation(m) for m in ordered] == ["∅", "b", "a d", "b c"]


def test_is_acyclic():
    a, b, c = Atom("a"), Atom("b"), Atom("c")
    assert is_acyclic([a, b, c], [(a, b), (b, c)])
    assert not is_acyclic([a, b], [(a, b), (b, a)])
    assert not is_acyclic([a], [(a, a)])
    assert is_acyclic([], [])


def test_program_is_hashable_and_immutable(ex1):
    assert hash(ex1.rules[0]) == hash(ex1.rules[0])
    with pytest.raises(AttributeError):
        ex1.rules = ()
    with pytest.raises(AttributeError):
        ex1.rules[0].head = ()
