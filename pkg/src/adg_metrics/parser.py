"""Recursive-descent parser for MiniADL.

Grammar (LL(1), comments run from `//` to end of line, input is UTF-8):

    architecture ::= "architecture" IDENT "{" item* "}"
    item         ::= component | resource | attach | before | exclusive | internal
    component    ::= "component" IDENT "{" compitem* "}"
    compitem     ::= port | complexity | access
    port         ::= "port" IDENT ":" ("in" | "out" | "inout") ";"
    complexity   ::= "complexity" INT ";"
    access       ::= ("reads" | "writes") IDENT "via" IDENT ";"
    resource     ::= "resource" IDENT ";"
    attach       ::= "attach" portref "->" portref ";"
    before       ::= "before" portref "->" portref ";"
    exclusive    ::= "exclusive" portref "," portref ";"
    internal     ::= "internal" portref "<-" portref ";"
    portref      ::= IDENT "." IDENT

Keywords are reserved and cannot be used as identifiers. Parsing stops at the
first error (lexical, syntactic, or semantic) and reports it with a 1-based
line/column position; semantic checks reuse model validation, so a successful
parse always yields a valid Architecture.
"""

import string
from dataclasses import dataclass

from .model import (
    AccessMode,
    Architecture,
    Attachment,
    Component,
    Direction,
    ExclusivePair,
    InternalFlow,
    Port,
    PortRef,
    Pos,
    ResourceAccess,
    validate,
)

KEYWORD = "keyword"
IDENT = "ident"
INT = "int"
LBRACE = "lbrace"
RBRACE = "rbrace"
COLON = "colon"
SEMICOLON = "semicolon"
COMMA = "comma"
DOT = "dot"
ARROW = "arrow"
LEFT_ARROW = "left_arrow"

KEYWORDS = frozenset(
    {
        "architecture",
        "component",
        "port",
        "complexity",
        "reads",
        "writes",
        "via",
        "resource",
        "attach",
        "before",
        "exclusive",
        "internal",
        "in",
        "out",
        "inout",
    }
)

_PUNCT = {
    "{": LBRACE,
    "}": RBRACE,
    ":": COLON,
    ";": SEMICOLON,
    ",": COMMA,
    ".": DOT,
}
_IDENT_START = frozenset(string.ascii_letters + "_")
_IDENT_CONT = frozenset(string.ascii_letters + string.digits + "_")
_DIGITS = frozenset(string.digits)


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int
    column: int


class ParseError(Exception):
    """Parse failure with a 1-based position and, for syntax errors, the set
    of token descriptions that would have been accepted."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)


def tokenize(source: str) -> list[Token]:
    """Split source text into tokens, skipping whitespace and `//` comments.

    Raises ParseError on the first illegal character.
    """
    tokens: list[Token] = []
    i = 0
    line = 1
    column = 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            column = 1
            continue
        if ch in " \t\r":
            i += 1
            column += 1
            continue
        if ch == "/" and source.startswith("//", i):
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch in _IDENT_START:
            j = i + 1
            while j < n and source[j] in _IDENT_CONT:
                j += 1
            lexeme = source[i:j]
            kind = KEYWORD if lexeme in KEYWORDS else IDENT
            tokens.append(Token(kind, lexeme, line, column))
            column += j - i
            i = j
            continue
        if ch in _DIGITS:
            j = i + 1
            while j < n and source[j] in _DIGITS:
                j += 1
            tokens.append(Token(INT, source[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch == "-" and source.startswith("->", i):
            tokens.append(Token(ARROW, "->", line, column))
            i += 2
            column += 2
            continue
        if ch == "<" and source.startswith("<-", i):
            tokens.append(Token(LEFT_ARROW, "<-", line, column))
            i += 2
            column += 2
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, column))
            i += 1
            column += 1
            continue
        raise ParseError(f"illegal character {ch!r}", line, column)
    return tokens


def _describe(token: Token | None) -> str:
    if token is None:
        return "end of input"
    if token.kind == KEYWORD:
        return f"keyword '{token.lexeme}'"
    if token.kind == IDENT:
        return f"identifier '{token.lexeme}'"
    if token.kind == INT:
        return f"integer {token.lexeme}"
    return f"'{token.lexeme}'"


def _end_pos(source: str) -> Pos:
    line = source.count("\n") + 1
    last_break = source.rfind("\n")
    return Pos(line, len(source) - last_break)


_ITEM_EXPECTED = ("component", "resource", "attach", "before", "exclusive", "internal", "'}'")
_COMPITEM_EXPECTED = ("port", "complexity", "reads", "writes", "'}'")
_DIRECTIONS = ("in", "out", "inout")


class _Parser:
    def __init__(self, tokens: list[Token], eof_pos: Pos):
        self._tokens = tokens
        self._i = 0
        self._eof = eof_pos

    def _peek(self) -> Token | None:
        if self._i < len(self._tokens):
            return self._tokens[self._i]
        return None

    def _pos(self) -> Pos:
        token = self._peek()
        if token is None:
            return self._eof
        return Pos(token.line, token.column)

    def _fail(self, expected: tuple[str, ...]) -> None:
        wanted = ", ".join(expected)
        raise ParseError(
            f"expected {wanted}, found {_describe(self._peek())}", *self._pos(), expected=expected
        )

    def _expect(self, kind: str, what: str) -> Token:
        token = self._peek()
        if token is None or token.kind != kind:
            self._fail((what,))
        self._i += 1
        return token

    def _expect_keyword(self, word: str) -> Token:
        token = self._peek()
        if token is None or token.kind != KEYWORD or token.lexeme != word:
            self._fail((f"'{word}'",))
        self._i += 1
        return token

    def _at_keyword(self, word: str) -> bool:
        token = self._peek()
        return token is not None and token.kind == KEYWORD and token.lexeme == word

    def _portref(self) -> PortRef:
        comp = self._expect(IDENT, "identifier")
        self._expect(DOT, "'.'")
        port = self._expect(IDENT, "identifier")
        return PortRef(comp.lexeme, port.lexeme, Pos(comp.line, comp.column))

    def parse_architecture(self) -> Architecture:
        self._expect_keyword("architecture")
        name = self._expect(IDENT, "identifier")
        self._expect(LBRACE, "'{'")
        components: list[Component] = []
        resources: list[str] = []
        attachments: list[Attachment] = []
        befores: list[Attachment] = []
        exclusives: list[ExclusivePair] = []
        internals: list[InternalFlow] = []
        while True:
            token = self._peek()
            if token is not None and token.kind == RBRACE:
                self._i += 1
                break
            if self._at_keyword("component"):
                components.append(self._component())
            elif self._at_keyword("resource"):
                self._i += 1
                resources.append(self._expect(IDENT, "identifier").lexeme)
                self._expect(SEMICOLON, "';'")
            elif self._at_keyword("attach"):
                attachments.append(self._attachment())
            elif self._at_keyword("before"):
                befores.append(self._attachment())
            elif self._at_keyword("exclusive"):
                self._i += 1
                a = self._portref()
                self._expect(COMMA, "','")
                b = self._portref()
                self._expect(SEMICOLON, "';'")
                exclusives.append(ExclusivePair(a, b))
            elif self._at_keyword("internal"):
                internals.append(self._internal())
            else:
                self._fail(_ITEM_EXPECTED)
        if self._peek() is not None:
            self._fail(("end of input",))
        return Architecture(
            name=name.lexeme,
            components=tuple(components),
            resources=tuple(resources),
            attachments=tuple(attachments),
            befores=tuple(befores),
            exclusives=tuple(exclusives),
            internal_flows=tuple(internals),
        )

    def _component(self) -> Component:
        self._expect_keyword("component")
        name = self._expect(IDENT, "identifier")
        self._expect(LBRACE, "'{'")
        ports: list[Port] = []
        complexity = 0
        accesses: list[ResourceAccess] = []
        while True:
            token = self._peek()
            if token is not None and token.kind == RBRACE:
                self._i += 1
                break
            if self._at_keyword("port"):
                self._i += 1
                pname = self._expect(IDENT, "identifier")
                self._expect(COLON, "':'")
                direction = self._peek()
                if (
                    direction is None
                    or direction.kind != KEYWORD
                    or direction.lexeme not in _DIRECTIONS
                ):
                    self._fail(_DIRECTIONS)
                self._i += 1
                self._expect(SEMICOLON, "';'")
                ports.append(
                    Port(pname.lexeme, Direction(direction.lexeme), Pos(pname.line, pname.column))
                )
            elif self._at_keyword("complexity"):
                self._i += 1
                value = self._expect(INT, "integer")
                self._expect(SEMICOLON, "';'")
                complexity = int(value.lexeme)  # repeated declarations: last wins
            elif self._at_keyword("reads") or self._at_keyword("writes"):
                mode = self._peek()
                self._i += 1
                resource = self._expect(IDENT, "identifier")
                self._expect_keyword("via")
                via = self._expect(IDENT, "identifier")
                self._expect(SEMICOLON, "';'")
                accesses.append(
                    ResourceAccess(
                        resource.lexeme,
                        AccessMode(mode.lexeme),
                        via.lexeme,
                        pos=Pos(resource.line, resource.column),
                        via_pos=Pos(via.line, via.column),
                    )
                )
            else:
                self._fail(_COMPITEM_EXPECTED)
        return Component(
            name.lexeme,
            tuple(ports),
            complexity,
            tuple(accesses),
            pos=Pos(name.line, name.column),
        )

    def _attachment(self) -> Attachment:
        self._i += 1  # 'attach' or 'before', checked by the caller
        src = self._portref()
        self._expect(ARROW, "'->'")
        dst = self._portref()
        self._expect(SEMICOLON, "';'")
        return Attachment(src, dst)

    def _internal(self) -> InternalFlow:
        self._expect_keyword("internal")
        out_ref = self._portref()
        self._expect(LEFT_ARROW, "'<-'")
        in_ref = self._portref()
        self._expect(SEMICOLON, "';'")
        if out_ref.component != in_ref.component:
            raise ParseError(
                "internal flow ports must belong to the same component"
                f" (got '{out_ref.component}' and '{in_ref.component}')",
                in_ref.pos.line,
                in_ref.pos.column,
            )
        return InternalFlow(
            out_ref.component,
            out_ref.port,
            in_ref.port,
            out_pos=out_ref.pos,
            in_pos=in_ref.pos,
        )


def parse(source: str | bytes) -> Architecture:
    """Parse MiniADL text into a validated Architecture.

    Accepts text or raw bytes (decoded as UTF-8; a bad byte sequence is
    reported at its position). Raises ParseError for every failure mode;
    nothing else escapes.
    """
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            prefix = data[: exc.start].decode("utf-8")
            pos = _end_pos(prefix)
            raise ParseError(
                f"input is not valid UTF-8 at byte offset {exc.start}", pos.line, pos.column
            ) from None
    else:
        text = source
    tokens = tokenize(text)
    arch = _Parser(tokens, _end_pos(text)).parse_architecture()
    outcome = validate(arch)
    if not outcome.ok:
        first = outcome.violations[0]
        raise ParseError(first.message, first.pos.line, first.pos.column)
    return arch
