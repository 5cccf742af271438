"""Reader/writer for the .tkb text format.

A document is a flat list of statements:

    individual tc1 : TestCase {        # declares a typed individual
      expected_result = "200 OK"       # attribute values are quoted strings
    }
    link produces(prt1, tc1)           # directed link between declared ids

"#" starts a line comment; whitespace is insignificant between tokens; string
escapes are \\" \\\\ and \\n; encoding is UTF-8, newlines LF or CRLF.  Links
may reference ids declared later: resolution happens after the whole
document is read.  Parsing recovers at the next statement keyword so one
error does not mask the rest of the file.

serialize() writes the canonical form: individuals sorted by id, attributes
by name, links by (relation, source, target), a pure function of model
content, so structurally equal models serialize byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kb import DuplicateIdError, KnowledgeBase

__all__ = ["ParseDiagnostic", "ParseError", "parse", "serialize"]

_KEYWORDS = ("individual", "link")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int  # 1-based
    column: int  # 1-based
    message: str

    def render(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class ParseError(ValueError):
    """Carries every diagnostic collected over the document."""

    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.render() for d in self.diagnostics))


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT STRING PUNCT EOF
    value: str
    line: int
    column: int


class _Lexer:
    _PUNCT = set(":{}(),=")

    def __init__(self, text: str, diagnostics: list[ParseDiagnostic]):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1
        self.diagnostics = diagnostics

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            token = self._next()
            out.append(token)
            if token.kind == "EOF":
                return out

    def _advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    def _next(self) -> _Token:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(text) and text[self.pos] != "\n":
                    self._advance()
            else:
                break
        if self.pos >= len(text):
            return _Token("EOF", "", self.line, self.column)

        line, column = self.line, self.column
        ch = text[self.pos]
        if ch in self._PUNCT:
            self._advance()
            return _Token("PUNCT", ch, line, column)
        if ch == '"':
            return self._string(line, column)
        if ch.isalpha() or ch == "_":
            chars = []
            while self.pos < len(text) and (text[self.pos].isalnum() or text[self.pos] == "_"):
                chars.append(self._advance())
            return _Token("IDENT", "".join(chars), line, column)
        self.diagnostics.append(ParseDiagnostic(line, column, f"unexpected character {ch!r}"))
        self._advance()
        return self._next()

    def _string(self, line: int, column: int) -> _Token:
        self._advance()  # opening quote
        chars = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "\n\r":
                break
            self._advance()
            if ch == '"':
                return _Token("STRING", "".join(chars), line, column)
            if ch == "\\":
                if self.pos >= len(self.text):
                    break
                esc_line, esc_column = self.line, self.column
                esc = self._advance()
                if esc == "n":
                    chars.append("\n")
                elif esc in ('"', "\\"):
                    chars.append(esc)
                else:
                    self.diagnostics.append(
                        ParseDiagnostic(esc_line, esc_column, f"invalid escape '\\{esc}' in string")
                    )
                    chars.append(esc)
            else:
                chars.append(ch)
        self.diagnostics.append(ParseDiagnostic(line, column, "unterminated string literal"))
        return _Token("STRING", "".join(chars), line, column)


class _Parser:
    def __init__(self, tokens: list[_Token], diagnostics: list[ParseDiagnostic]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics = diagnostics
        self.kb = KnowledgeBase()
        # Link endpoint occurrences awaiting resolution: (id, token).
        self.pending: list[tuple[str, _Token]] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def error(self, token: _Token, message: str) -> None:
        self.diagnostics.append(ParseDiagnostic(token.line, token.column, message))

    def recover(self) -> None:
        """Skip ahead to the next statement keyword (or EOF)."""
        while True:
            token = self.peek()
            if token.kind == "EOF" or (token.kind == "IDENT" and token.value in _KEYWORDS):
                return
            self.advance()

    def expect_punct(self, symbol: str) -> _Token | None:
        token = self.peek()
        if token.kind == "PUNCT" and token.value == symbol:
            return self.advance()
        self.error(token, f"expected '{symbol}'")
        return None

    def expect_ident(self, what: str) -> _Token | None:
        token = self.peek()
        # Statement keywords are reserved so recovery can slice at them.
        if token.kind == "IDENT" and token.value not in _KEYWORDS:
            return self.advance()
        self.error(token, f"expected {what}")
        return None

    def run(self) -> None:
        while True:
            token = self.peek()
            if token.kind == "EOF":
                break
            if token.kind == "IDENT" and token.value == "individual":
                if not self._individual():
                    self.recover()
            elif token.kind == "IDENT" and token.value == "link":
                if not self._link():
                    self.recover()
            else:
                shown = token.value if token.value else token.kind
                self.error(token, f"expected 'individual' or 'link', found '{shown}'")
                self.advance()
                self.recover()
        self._resolve_links()

    def _individual(self) -> bool:
        self.advance()  # 'individual'
        id_token = self.expect_ident("individual id")
        if id_token is None:
            return False
        if self.expect_punct(":") is None:
            return False
        type_token = self.expect_ident("type name")
        if type_token is None:
            return False
        attrs: dict[str, str] = {}
        if self.peek().kind == "PUNCT" and self.peek().value == "{":
            self.advance()
            while True:
                token = self.peek()
                if token.kind == "PUNCT" and token.value == "}":
                    self.advance()
                    break
                if token.kind == "EOF":
                    self.error(token, "expected '}'")
                    return False
                name_token = self.expect_ident("attribute name")
                if name_token is None:
                    return False
                if self.expect_punct("=") is None:
                    return False
                value_token = self.peek()
                if value_token.kind != "STRING":
                    self.error(value_token, "expected string value")
                    return False
                self.advance()
                # Repeated assignment to one attribute: last one wins.
                attrs[name_token.value] = value_token.value
        try:
            self.kb.add_individual(id_token.value, type_token.value, attrs)
        except DuplicateIdError:
            self.error(id_token, f"duplicate individual id '{id_token.value}'")
        return True

    def _link(self) -> bool:
        self.advance()  # 'link'
        rel_token = self.expect_ident("relationship name")
        if rel_token is None:
            return False
        if self.expect_punct("(") is None:
            return False
        source_token = self.expect_ident("source id")
        if source_token is None:
            return False
        if self.expect_punct(",") is None:
            return False
        target_token = self.expect_ident("target id")
        if target_token is None:
            return False
        if self.expect_punct(")") is None:
            return False
        self.pending.append((source_token.value, source_token))
        self.pending.append((target_token.value, target_token))
        self.kb.add_link(rel_token.value, source_token.value, target_token.value)
        return True

    def _resolve_links(self) -> None:
        for ind_id, token in self.pending:
            if ind_id not in self.kb:
                self.error(token, f"unresolved identifier '{ind_id}'")


def parse(text: str) -> KnowledgeBase:
    """Parse a .tkb document into a finalized model.

    Raises ParseError carrying one diagnostic per problem found; recovery
    means a single bad statement does not hide later errors.
    """
    diagnostics: list[ParseDiagnostic] = []
    tokens = _Lexer(text, diagnostics).tokens()
    parser = _Parser(tokens, diagnostics)
    parser.run()
    if diagnostics:
        diagnostics.sort(key=lambda d: (d.line, d.column, d.message))
        raise ParseError(diagnostics)
    return parser.kb.finalize()


def _escape(value: str) -> str:
    if "\r" in value:
        raise ValueError("attribute values may not contain carriage returns")
    return value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def serialize(kb: KnowledgeBase) -> str:
    """Canonical text form; parse(serialize(kb)) == kb for any finalized kb."""
    lines = []
    for ind in kb.individuals():
        header = f"individual {ind.id} : {ind.type_name}"
        if ind.attrs:
            lines.append(header + " {")
            for name in sorted(ind.attrs):
                lines.append(f'  {name} = "{_escape(ind.attrs[name])}"')
            lines.append("}")
        else:
            lines.append(header)
    for link in kb.links():
        lines.append(f"link {link.rel_name}({link.source}, {link.target})")
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
