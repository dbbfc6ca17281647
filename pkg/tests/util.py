"""Shared helpers: independent brute-force oracles and a CLI runner."""

from __future__ import annotations

import os
import subprocess
import sys
from itertools import combinations, product
from pathlib import Path

from sgx import Explanation, Interpretation, Program, parse_program
from sgx.semantics import is_model, reduct, satisfies_body

SRC = Path(__file__).resolve().parents[1] / "src"
FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def load_fixture(name: str) -> Program:
    return parse_program(fixture_text(name))


def squads_text(n: int) -> str:
    lines = ["s0: signal_0."]
    for i in range(n):
        lines.append(f"a{i}: fireA_{i} :- signal_{i}.")
        lines.append(f"b{i}: fireB_{i} :- signal_{i}.")
        lines.append(f"ap{i + 1}: signal_{i + 1} :- fireA_{i}.")
        lines.append(f"bp{i + 1}: signal_{i + 1} :- fireB_{i}.")
    return "\n".join(lines) + "\n"


def squads(n: int) -> Program:
    return parse_program(squads_text(n))


def naive_explanations(program: Program, interp: Interpretation) -> list[Explanation]:
    """Every injective, acyclic pick from the per-atom support sets, by raw
    cartesian product; independent of the search in sgx.explain."""
    atoms = sorted(interp)
    pools = [[r for r in program.rules
              if a in r.head_set and satisfies_body(interp, r)] for a in atoms]
    out = []
    for combo in product(*pools):
        labelling = {a: r.label for a, r in zip(atoms, combo)}
        if len(set(labelling.values())) != len(labelling):
            continue
        candidate = Explanation.from_labelling(program, interp, labelling)
        if candidate.acyclic:
            out.append(candidate)
    return out


def naive_support_graphs(program: Program, interp: Interpretation) -> list[Explanation]:
    atoms = sorted(interp)
    pools = [[r for r in program.rules
              if a in r.head_set and satisfies_body(interp, r)] for a in atoms]
    out = []
    for combo in product(*pools):
        labelling = {a: r.label for a, r in zip(atoms, combo)}
        if len(set(labelling.values())) != len(labelling):
            continue
        out.append(Explanation.from_labelling(program, interp, labelling))
    return out


def naive_stable(program: Program) -> list[Interpretation]:
    """Stable models straight from the definition: subsets of the signature
    that are minimal models of their own reduct."""
    atoms = program.sorted_signature
    out = []
    for size in range(len(atoms) + 1):
        for combo in combinations(atoms, size):
            interp = frozenset(combo)
            red = reduct(program, interp)
            if not is_model(interp, red):
                continue
            smaller = (frozenset(sub)
                       for k in range(len(interp))
                       for sub in combinations(sorted(interp), k))
            if any(is_model(s, red) for s in smaller):
                continue
            out.append(interp)
    return out


def labelling_names(explanation: Explanation) -> dict[str, str]:
    return {a.name: l.id for a, l in explanation.labelling.items()}


def edge_names(explanation: Explanation) -> set[tuple[str, str]]:
    return {(q.name, p.name) for q, p in explanation.edges}


def run_cli(*args: str, cwd: Path | None = None,
            binary: bool = False) -> subprocess.CompletedProcess:
    env = os.environ.copy()
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run([sys.executable, "-m", "sgx", *args],
                          capture_output=True, text=not binary,
                          cwd=cwd, env=env)
