"""Textual `.lp` format: statements `LBL: HEAD :- BODY.` with `%` comments.

Heads are `;`-separated atoms (`|` accepted as alias), `#false` or nothing for
constraints, or a singleton choice `{p}` which expands to `p :- BODY, not not p`.
Body literals are `a`, `not a` or `not not a`.  Unlabelled statements get the
auto-label `r_<line>`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Atom, Label, Program, Rule, SgxError, validate_program


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError("source positions are 1-based")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(SgxError):
    def __init__(self, span: SourceSpan, message: str):
        self.span = span
        self.message = message
        super().__init__(f"{span}: {message}")


_PUNCT = (":-", ":", ".", ",", ";", "|", "{", "}")


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "punct" | "directive" | "eof"
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        span = SourceSpan(line, col)
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], span))
            col += j - i
            i = j
            continue
        if ch == "#":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(_Token("directive", text[i:j], span))
            col += j - i
            i = j
            continue
        for punct in _PUNCT:
            if text.startswith(punct, i):
                tokens.append(_Token("punct", punct, span))
                i += len(punct)
                col += len(punct)
                break
        else:
            raise ParseError(span, f"unexpected character {ch!r}")
    tokens.append(_Token("eof", "", SourceSpan(line, col)))
    return tokens


def expand_choice(label: Label, atom: Atom, pos_body: tuple[Atom, ...],
                  neg_body: tuple[Atom, ...], dneg_body: tuple[Atom, ...]) -> Rule:
    """Expand the choice head `{p}` into `p :- BODY, not not p`."""
    return Rule(label, (atom,), pos_body, neg_body, dneg_body + (atom,))


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect_punct(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            shown = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(tok.span, f"expected {text!r} but found {shown!r}")
        return self.next()

    def atom(self, role: str = "atom") -> Atom:
        tok = self.peek()
        if tok.kind != "name":
            shown = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(tok.span, f"expected {role} but found {shown!r}")
        if tok.text == "not":
            raise ParseError(tok.span, "'not' is a reserved word")
        self.next()
        try:
            return Atom(tok.text)
        except ValueError as exc:
            raise ParseError(tok.span, str(exc)) from None

    def program(self) -> Program:
        rules = []
        while self.peek().kind != "eof":
            rules.append(self.statement())
        return validate_program(rules)

    def statement(self) -> Rule:
        start = self.peek().span
        label = None
        if (self.peek().kind == "name" and self.peek().text != "not"
                and self.peek(1).kind == "punct" and self.peek(1).text == ":"):
            tok = self.next()
            self.next()
            try:
                label = Label(tok.text)
            except ValueError as exc:
                raise ParseError(tok.span, str(exc)) from None
        if label is None:
            label = Label(f"r_{start.line}")

        choice_atom = None
        head: tuple[Atom, ...] = ()
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "{":
            self.next()
            choice_atom = self.atom("choice atom")
            closing = self.peek()
            if closing.kind == "punct" and closing.text in (";", "|", ","):
                raise ParseError(closing.span, "choice braces must contain exactly one atom")
            self.expect_punct("}")
        elif tok.kind == "directive":
            if tok.text != "#false":
                raise ParseError(tok.span, f"unknown directive {tok.text!r}")
            self.next()
        elif tok.kind == "punct" and tok.text in (":-", "."):
            pass  # empty head: constraint
        else:
            atoms = [self.atom("head atom")]
            while self.peek().kind == "punct" and self.peek().text in (";", "|"):
                self.next()
                atoms.append(self.atom("head atom"))
            head = tuple(atoms)

        pos: list[Atom] = []
        neg: list[Atom] = []
        dneg: list[Atom] = []
        if self.peek().kind == "punct" and self.peek().text == ":-":
            self.next()
            while True:
                negations = 0
                while self.peek().kind == "name" and self.peek().text == "not":
                    negations += 1
                    self.next()
                if negations > 2:
                    raise ParseError(self.peek().span, "at most two negations may prefix an atom")
                target = (pos, neg, dneg)[negations]
                target.append(self.atom("body atom"))
                if self.peek().kind == "punct" and self.peek().text == ",":
                    self.next()
                    continue
                break
        self.expect_punct(".")

        if choice_atom is not None:
            return expand_choice(label, choice_atom, tuple(pos), tuple(neg), tuple(dneg))
        return Rule(label, head, tuple(pos), tuple(neg), tuple(dneg))


def parse_program(text: str) -> Program:
    return _Parser(_tokenize(text)).program()


def parse_model(text: str) -> frozenset[Atom]:
    """Parse a comma-separated atom list; the empty string is the empty model."""
    atoms = set()
    for col, part in _split_with_offsets(text):
        try:
            atoms.add(Atom(part))
        except ValueError as exc:
            raise ParseError(SourceSpan(1, col), str(exc)) from None
    return frozenset(atoms)


def _split_with_offsets(text: str) -> list[tuple[int, str]]:
    out = []
    offset = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        if stripped:
            out.append((offset + chunk.index(stripped[0]) + 1, stripped))
        elif text.strip():
            raise ParseError(SourceSpan(1, offset + 1), "empty atom in model list")
        offset += len(chunk) + 1
    return out


def render_rule(rule: Rule) -> str:
    head = " ; ".join(a.name for a in rule.head) if rule.head else "#false"
    body = ([a.name for a in rule.pos_body]
            + [f"not {a.name}" for a in rule.neg_body]
            + [f"not not {a.name}" for a in rule.dneg_body])
    if body:
        return f"{rule.label.id}: {head} :- {', '.join(body)}."
    return f"{rule.label.id}: {head}."


def render_program(program: Program) -> str:
    """Deterministic text form; `parse_program(render_program(p)) == p`.
    Choice sugar is not re-introduced: the expanded `not not` form is printed."""
    return "".join(render_rule(r) + "\n" for r in program.rules)
