"""Command-line front end.

Exit codes are stable API: 0 ok, 1 parse error, 2 signature over the cap,
3 not a classical model, 4 atom not in the model, 5 not a stable model,
6 property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import (
    Atom,
    DuplicateAtomError,
    DuplicateLabelError,
    Explanation,
    Interpretation,
    Program,
    format_interpretation,
)
from .encoding import (
    crosscheck_bijection,
    emit_program_encoding,
    ground_encoding,
    model_facts,
)
from .explain import (
    ModelMismatchError,
    NotAModelError,
    NotStableError,
    enumerate_explanations,
    is_justified,
    is_supported,
)
from .parser import ParseError, parse_model, parse_program, render_program
from .proof import AtomNotInModelError, build_proof, render_proof
from .propgen import oracle_check, run_fuzz
from .semantics import (
    SignatureTooLargeError,
    enumerate_models,
    enumerate_stable,
    is_model,
    is_stable,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_NOT_A_MODEL = 3
EXIT_ATOM = 4
EXIT_NOT_STABLE = 5
EXIT_VIOLATION = 6


def _load(path: str) -> Program:
    return parse_program(Path(path).read_text(encoding="utf-8"))


def _parse_model_arg(args, program: Program) -> Interpretation:
    model = parse_model(args.model)
    for atom in sorted(model - program.signature):
        print(f"warning: atom {atom.name!r} does not occur in the program",
              file=sys.stderr)
    return model


def _model_lines(models: list[Interpretation], fmt: str) -> str:
    if fmt == "json":
        payload = {"models": [sorted(a.name for a in m) for m in models]}
        return json.dumps(payload, indent=2, sort_keys=True)
    return "\n".join(format_interpretation(m) for m in models)


def _print(text: str) -> None:
    if text:
        print(text)


def cmd_models(args) -> int:
    program = _load(args.file)
    kind = args.kind
    if kind == "models":
        models = enumerate_models(program, args.cap)
    elif kind == "stable":
        models = enumerate_stable(program, args.cap)
    elif kind == "supported":
        models = [m for m in enumerate_models(program, args.cap)
                  if is_supported(program, m)]
    else:
        models = [m for m in enumerate_models(program, args.cap)
                  if is_justified(program, m)]
    _print(_model_lines(models, args.format))
    return EXIT_OK


def _explanation_dict(explanation: Explanation) -> dict:
    return {
        "labelling": {a.name: l.id for a, l in explanation.labelling.items()},
        "edges": [[q.name, p.name] for q, p in explanation.sorted_edges()],
    }


def _explanation_block(index: int, explanation: Explanation) -> str:
    lines = [f"explanation {index}:"]
    lines += [f"  {label.id}: {atom.name}" for atom, label in explanation.sorted_items()]
    lines += [f"  {q.name} -> {p.name}" for q, p in explanation.sorted_edges()]
    return "\n".join(lines)


def _explanation_dot(index: int, explanation: Explanation) -> str:
    lines = [f"digraph explanation_{index} {{"]
    for atom, label in explanation.sorted_items():
        lines.append(f'  "{atom.name}" [label="{label.id}: {atom.name}"];')
    for q, p in explanation.sorted_edges():
        lines.append(f'  "{q.name}" -> "{p.name}";')
    lines.append("}")
    return "\n".join(lines)


def cmd_explain(args) -> int:
    program = _load(args.file)
    model = _parse_model_arg(args, program)
    if not is_model(model, program):
        raise NotAModelError(model)
    explanations = enumerate_explanations(program, model, limit=args.limit)
    if args.format == "json":
        payload = {
            "model": sorted(a.name for a in model),
            "explanations": [_explanation_dict(e) for e in explanations],
            "count": len(explanations),
        }
        _print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "dot":
        _print("\n\n".join(_explanation_dot(i, e)
                           for i, e in enumerate(explanations, 1)))
    else:
        _print("\n\n".join(_explanation_block(i, e)
                           for i, e in enumerate(explanations, 1)))
    return EXIT_OK


def cmd_prove(args) -> int:
    program = _load(args.file)
    model = _parse_model_arg(args, program)
    if not is_model(model, program):
        raise NotAModelError(model)
    try:
        atom = Atom(args.atom)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if atom not in model:
        raise AtomNotInModelError(atom)
    explanations = enumerate_explanations(program, model, limit=args.limit)
    proofs = [build_proof(e, atom) for e in explanations]
    if args.format == "json":
        rendered = [json.loads(render_proof(p, "json")) for p in proofs]
        payload = {"atom": atom.name, "proofs": rendered}
        _print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print("\n\n".join(render_proof(p, "ascii") for p in proofs))
    return EXIT_OK


def cmd_encode(args) -> int:
    program = _load(args.file)
    model = _parse_model_arg(args, program)
    if args.ground:
        encoding = ground_encoding(program, model, force=args.force)
        text = render_program(encoding.program)
    else:
        if not args.force and not is_stable(program, model):
            raise NotStableError(model)
        text = emit_program_encoding(program) + "\n" + model_facts(model)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    program = _load(args.file)
    failed = False
    stable = enumerate_stable(program, args.cap)
    print(f"stable models: {len(stable)}")
    for model in stable:
        report = crosscheck_bijection(program, model)
        status = "ok" if report.ok else "FAIL"
        print(f"model {{{format_interpretation(model)}}}: "
              f"explanations {report.explanation_count}, "
              f"answer sets {report.answer_set_count}, bijection {status}")
        failed = failed or not report.ok
    oracle = oracle_check(program, cap=args.cap)
    if oracle.ok:
        print("oracle: ok")
    else:
        print(f"oracle: {len(oracle.violations)} violations")
        for violation in oracle.violations:
            print(f"  {violation}")
        failed = True
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_fuzz(args) -> int:
    report = run_fuzz(args.seed, args.cases)
    print(f"cases: {report.cases}, failures: {len(report.failures)}")
    for failure in report.failures:
        dump = Path(f"fuzz_fail_{failure.case_seed}.lp")
        dump.write_text(render_program(failure.shrunk), encoding="utf-8")
        print(f"case seed {failure.case_seed}: dumped {dump}")
        for violation in failure.violations:
            print(f"  {violation}")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgx",
        description="Support-graph explanations for labelled logic programs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None,
                       help="signature cap for enumeration (default 22)")

    for kind in ("models", "stable", "supported", "justified"):
        p = sub.add_parser(kind, help=f"list {kind} of the program")
        p.add_argument("file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        add_cap(p)
        p.set_defaults(func=cmd_models, kind=kind)

    p = sub.add_parser("explain", help="enumerate explanations of a model")
    p.add_argument("file")
    p.add_argument("--model", required=True,
                   help="comma-separated atoms; empty string for the empty model")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("prove", help="render proofs of an atom")
    p.add_argument("file")
    p.add_argument("--model", required=True)
    p.add_argument("--atom", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("encode", help="emit the explanation meta-encoding")
    p.add_argument("file")
    p.add_argument("--model", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--ground", action="store_true",
                   help="emit the internal ground form instead of the generic encoding")
    p.add_argument("--force", action="store_true",
                   help="allow a non-stable classical model")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", help="cross-check explanations against the encoding")
    p.add_argument("file")
    add_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="property-check random programs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("error: --limit must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DuplicateLabelError, DuplicateAtomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SignatureTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotAModelError, ModelMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_MODEL
    except AtomNotInModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ATOM
    except NotStableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_STABLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
