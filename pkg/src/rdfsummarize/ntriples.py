"""Line-oriented N-Triples reader and canonical writer."""

from __future__ import annotations

import logging
import re
from typing import IO, Iterable, Union

from .model import BLANK, IRI, LITERAL, Graph, Node

log = logging.getLogger(__name__)

_TERM = (
    r'<[^<>"\s]*>'
    r'|_:[A-Za-z0-9][A-Za-z0-9._\-]*'
    r'|"(?:[^"\\\n\r]|\\.)*"(?:@[A-Za-z]+(?:-[A-Za-z0-9]+)*|\^\^<[^<>"\s]*>)?'
)
_TRIPLE_RE = re.compile(
    r'^[ \t]*(?P<s><[^<>"\s]*>|_:[A-Za-z0-9][A-Za-z0-9._\-]*)'
    r'[ \t]+(?P<p><[^<>"\s]*>)'
    r'[ \t]+(?P<o>%s)'
    r'[ \t]*\.[ \t]*(?:#.*)?$' % _TERM
)

_UNESCAPE_RE = re.compile(r'\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)')
_SIMPLE_UNESCAPES = {
    't': '\t', 'b': '\b', 'n': '\n', 'r': '\r', 'f': '\f',
    '"': '"', "'": "'", '\\': '\\',
}


class ParseError(ValueError):
    """Malformed N-Triples line; carries line number and offending text."""

    def __init__(self, line_no: int, text: str, reason: str) -> None:
        super().__init__(f"line {line_no}: {reason}: {text.strip()!r}")
        self.line_no = line_no
        self.text = text
        self.reason = reason


def _unescape(raw: str, line_no: int, line: str) -> str:
    def sub(m: re.Match) -> str:
        esc = m.group(1)
        if esc[0] in 'uU':
            return chr(int(esc[1:], 16))
        try:
            return _SIMPLE_UNESCAPES[esc]
        except KeyError:
            raise ParseError(line_no, line, f"bad escape \\{esc}") from None

    return _UNESCAPE_RE.sub(sub, raw)


def _intern_term(g: Graph, term: str, line_no: int, line: str) -> int:
    if term.startswith('<'):
        return g.intern_iri(term[1:-1])
    if term.startswith('_:'):
        return g.intern_blank(term[2:])
    # literal: quoted lexical form with optional @lang or ^^<datatype>
    end = term.rindex('"')
    lexical = _unescape(term[1:end], line_no, line)
    suffix = term[end + 1:]
    if suffix.startswith('@'):
        return g.intern_literal(lexical, language=suffix[1:])
    if suffix.startswith('^^'):
        return g.intern_literal(lexical, datatype=suffix[3:-1])
    return g.intern_literal(lexical)


def parse_ntriples(source: Union[str, bytes, IO, Iterable[str]],
                   strict: bool = True) -> Graph:
    """Parse N-Triples into a Graph.

    `source` may be a string, UTF-8 bytes, an open file, or an iterable of
    lines. Comment lines and blank lines are skipped; exact duplicate
    triples are dropped. In strict mode a malformed line raises ParseError;
    in lenient mode it is skipped with a warning.
    """
    if isinstance(source, bytes):
        lines: Iterable[str] = source.decode('utf-8').splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source

    g = Graph()
    for line_no, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode('utf-8')
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        m = _TRIPLE_RE.match(line)
        if m is None:
            err = ParseError(line_no, line, "not a valid triple")
            if strict:
                raise err
            log.warning("skipping %s", err)
            continue
        try:
            s = _intern_term(g, m.group('s'), line_no, line)
            p_term = m.group('p')
            p = g.intern_label(p_term[1:-1])
            o = _intern_term(g, m.group('o'), line_no, line)
        except ParseError:
            if strict:
                raise
            log.warning("skipping malformed line %d", line_no)
            continue
        g.add_triple(s, p, o)
    return g


def parse_ntriples_file(path: str, strict: bool = True) -> Graph:
    with open(path, 'rb') as fh:
        return parse_ntriples(fh.read(), strict=strict)


_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\r': '\\r', '\t': '\\t'}


def _escape(text: str) -> str:
    out = []
    for ch in text:
        esc = _ESCAPES.get(ch)
        if esc is not None:
            out.append(esc)
        elif ord(ch) < 0x20:
            out.append('\\u%04X' % ord(ch))
        else:
            out.append(ch)
    return ''.join(out)


def format_node(n: Node) -> str:
    if n.kind == IRI:
        return f'<{n.lexical}>'
    if n.kind == BLANK:
        return f'_:{n.lexical}'
    base = f'"{_escape(n.lexical)}"'
    if n.language is not None:
        return base + '@' + n.language
    if n.datatype is not None:
        return base + '^^<' + n.datatype + '>'
    return base


def serialize_ntriples(g: Graph) -> str:
    """Canonical N-Triples: one line per triple, sorted by predicate,
    subject, object (on their serialized forms), trailing newline."""
    rows = []
    for t in g.triples:
        s = format_node(g.node(t.subject))
        p = f'<{g.label(t.predicate)}>'
        o = format_node(g.node(t.object))
        rows.append((p, s, o))
    rows.sort()
    return ''.join(f'{s} {p} {o} .\n' for p, s, o in rows)
