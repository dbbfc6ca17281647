"""Proof trees induced by an explanation, and their rendering."""

from __future__ import annotations

import json

from .core import Atom, Explanation, ProofTree, SgxError


class AtomNotInModelError(SgxError):
    def __init__(self, atom: Atom):
        self.atom = atom
        super().__init__(f"atom {atom.name!r} is not in the explained model")


class CyclicGraphError(SgxError):
    def __init__(self):
        super().__init__("proof trees require an acyclic support graph")


def build_proof(explanation: Explanation, atom: Atom) -> ProofTree:
    """The derivation of ``atom``: its node carries the explaining label, with
    one premise subtree per incoming edge, premises sorted by atom name.

    Recursion is well-founded because the explanation is acyclic.  Subtrees
    are shared per atom, so every occurrence of an atom roots the identical
    derivation.
    """
    if atom not in explanation.model:
        raise AtomNotInModelError(atom)
    if not explanation.acyclic:
        raise CyclicGraphError()
    incoming: dict[Atom, list[Atom]] = {a: [] for a in explanation.model}
    for q, p in explanation.edges:
        incoming[p].append(q)
    memo: dict[Atom, ProofTree] = {}

    def node(p: Atom) -> ProofTree:
        if p not in memo:
            premises = tuple(node(q) for q in sorted(incoming[p]))
            memo[p] = ProofTree(p, explanation.labelling[p], premises)
        return memo[p]

    return node(atom)


def _tree_dict(tree: ProofTree) -> dict:
    return {
        "atom": tree.atom.name,
        "label": tree.label.id,
        "premises": [_tree_dict(p) for p in tree.premises],
    }


def _ascii_lines(tree: ProofTree, depth: int, lines: list[str]) -> None:
    lines.append("  " * depth + f"{tree.atom.name}  ({tree.label.id})")
    if not tree.premises:
        lines.append("  " * (depth + 1) + "⊤")
    else:
        for premise in tree.premises:
            _ascii_lines(premise, depth + 1, lines)


def render_proof(tree: ProofTree, format: str = "ascii") -> str:
    """ascii: one `atom  (label)` line per node, premises indented beneath
    their conclusion, ⊤ printed under empty premises.  json: nested records
    {"atom", "label", "premises"}."""
    if format == "ascii":
        lines: list[str] = []
        _ascii_lines(tree, 0, lines)
        return "\n".join(lines)
    if format == "json":
        return json.dumps(_tree_dict(tree), indent=2, sort_keys=True)
    raise ValueError(f"unknown proof format {format!r}")
