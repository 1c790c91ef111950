"""Straight-line programs: model, validation, text format, builders and bounded expansion.

A straight-line program (SLP) is a sequence of statements, each either a single
character or the concatenation of two earlier symbols.  Symbol ids are 1-based
statement positions.  Uncompressed lengths are Python ints, so texts of length
2**60 and beyond are represented exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from ..errors import PatternError, SlpFormatError, TooLongError
from . import diagnostics


@dataclass(frozen=True)
class Terminal:
    char: str


@dataclass(frozen=True)
class Concat:
    left: int
    right: int


Statement = Union[Terminal, Concat]


@dataclass(frozen=True)
class Slp:
    """A validated straight-line program.

    Build instances through :meth:`from_statements` (or the parsers and builders
    below); the constructor itself trusts its arguments.
    """

    statements: Tuple[Statement, ...]
    root: int
    lengths: Tuple[int, ...]

    @classmethod
    def from_statements(cls, statements: Sequence[Statement], root: Optional[int] = None) -> "Slp":
        """Validate ``statements`` and compute every symbol length bottom-up.

        Raises:
            SlpFormatError: empty program, bad character, forward/self reference or bad root.
        """
        statements = tuple(statements)
        if not statements:
            raise SlpFormatError("program has no statements")
        lengths: List[int] = []
        for r, stmt in enumerate(statements, start=1):
            if isinstance(stmt, Terminal):
                if len(stmt.char) != 1:
                    raise SlpFormatError(f"statement {r}: terminal must be a single character")
                lengths.append(1)
            elif isinstance(stmt, Concat):
                for ref in (stmt.left, stmt.right):
                    if ref == r:
                        raise SlpFormatError(f"statement {r}: self reference")
                    if not 1 <= ref < r:
                        raise SlpFormatError(f"statement {r}: forward reference to {ref}")
                lengths.append(lengths[stmt.left - 1] + lengths[stmt.right - 1])
            else:
                raise SlpFormatError(f"statement {r}: unknown statement type {type(stmt).__name__}")
        if root is None:
            root = len(statements)
        if not 1 <= root <= len(statements):
            raise SlpFormatError(f"root {root} is not a declared symbol")
        return cls(statements=statements, root=root, lengths=tuple(lengths))

    # ------------------------------------------------------------------ queries
    @property
    def statement_count(self) -> int:
        """m̄, the number of statements."""
        return len(self.statements)

    @property
    def text_length(self) -> int:
        """m, the length of the text derived by the root."""
        return self.lengths[self.root - 1]

    def statement(self, sym: int) -> Statement:
        return self.statements[sym - 1]

    def length(self, sym: int) -> int:
        return self.lengths[sym - 1]

    def reachable(self, sym: Optional[int] = None) -> Set[int]:
        """Symbols used in the derivation of ``sym`` (default: root), ``sym`` included."""
        start = self.root if sym is None else sym
        seen = {start}
        stack = [start]
        while stack:
            stmt = self.statements[stack.pop() - 1]
            if isinstance(stmt, Concat):
                for ref in (stmt.left, stmt.right):
                    if ref not in seen:
                        seen.add(ref)
                        stack.append(ref)
        return seen

    def unreferenced(self) -> List[int]:
        """Statements that no concatenation mentions, the root excepted."""
        referenced: Set[int] = {self.root}
        for stmt in self.statements:
            if isinstance(stmt, Concat):
                referenced.update((stmt.left, stmt.right))
        return [r for r in range(1, len(self.statements) + 1) if r not in referenced]

    def depth(self) -> int:
        """Height of the root's derivation tree (a terminal has depth 1)."""
        heights: List[int] = []
        for stmt in self.statements:
            if isinstance(stmt, Terminal):
                heights.append(1)
            else:
                heights.append(1 + max(heights[stmt.left - 1], heights[stmt.right - 1]))
        return heights[self.root - 1]

    def alphabet(self) -> List[str]:
        return sorted({stmt.char for stmt in self.statements if isinstance(stmt, Terminal)})


def symbol_length(slp: Slp, sym: int) -> int:
    """Return the uncompressed length of ``sym``."""
    return slp.length(sym)


def slp_info(slp: Slp) -> Dict[str, object]:
    """Summary used by ``slpseq info``."""
    return {
        "mbar": slp.statement_count,
        "m": slp.text_length,
        "root": slp.root,
        "depth": slp.depth(),
        "alphabet": "".join(slp.alphabet()),
        "unreferenced": len(slp.unreferenced()),
    }


# ---------------------------------------------------------------------- expansion
def expand(slp: Slp, sym: Optional[int] = None, max_len: int = 10_000) -> str:
    """Return the string derived by ``sym`` (default: root) if it has at most ``max_len`` characters.

    Raises:
        TooLongError: the derived string is longer than ``max_len``.
    """
    sym = slp.root if sym is None else sym
    length = slp.length(sym)
    if length > max_len:
        raise TooLongError(length, max_len)
    parts: List[str] = []
    stack = [sym]
    while stack:
        stmt = slp.statement(stack.pop())
        if isinstance(stmt, Terminal):
            parts.append(stmt.char)
        else:
            stack.append(stmt.right)
            stack.append(stmt.left)
    return "".join(parts)


# ------------------------------------------------------------------------ builders
def build_slp_from_text(text: str) -> Slp:
    """Balanced SLP for ``text``: one terminal per distinct character, then pairwise levels.

    Identical adjacent pairs share one statement, so repetitive texts compress.
    """
    if not text:
        raise PatternError("cannot build a straight-line program for an empty text")
    statements: List[Statement] = []
    terminal_ids: Dict[str, int] = {}
    for ch in text:
        if ch not in terminal_ids:
            statements.append(Terminal(ch))
            terminal_ids[ch] = len(statements)
    level = [terminal_ids[ch] for ch in text]
    pair_ids: Dict[Tuple[int, int], int] = {}
    while len(level) > 1:
        nxt: List[int] = []
        for k in range(0, len(level) - 1, 2):
            pair = (level[k], level[k + 1])
            if pair not in pair_ids:
                statements.append(Concat(*pair))
                pair_ids[pair] = len(statements)
            nxt.append(pair_ids[pair])
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return Slp.from_statements(statements, root=level[0])


def chain_slp_from_text(text: str) -> Slp:
    """Left-deep SLP: X1 = c1, Xk = X(k-1) ck.  Depth equals the text length."""
    if not text:
        raise PatternError("cannot build a straight-line program for an empty text")
    statements: List[Statement] = []
    terminal_ids: Dict[str, int] = {}
    for ch in text:
        if ch not in terminal_ids:
            statements.append(Terminal(ch))
            terminal_ids[ch] = len(statements)
    current = terminal_ids[text[0]]
    for ch in text[1:]:
        statements.append(Concat(current, terminal_ids[ch]))
        current = len(statements)
    return Slp.from_statements(statements, root=current)


def doubling_slp(char: str, k: int) -> Slp:
    """SLP for ``char * 2**k`` with ``k`` doubling statements."""
    statements: List[Statement] = [Terminal(char)]
    for r in range(1, k + 1):
        statements.append(Concat(r, r))
    return Slp.from_statements(statements)


def fibonacci_slp(count: int = 6) -> Slp:
    """1='b', 2='a', r = (r-1)(r-2): statement 6 derives "abaababa"."""
    if count < 2:
        raise SlpFormatError("a Fibonacci program needs at least two statements")
    statements: List[Statement] = [Terminal("b"), Terminal("a")]
    for r in range(3, count + 1):
        statements.append(Concat(r - 1, r - 2))
    return Slp.from_statements(statements)


def power_slp(unit: str, k: int) -> Slp:
    """SLP for ``unit * 2**k``: a balanced program for ``unit`` followed by ``k`` doublings."""
    base = build_slp_from_text(unit)
    statements = list(base.statements)
    current = base.root
    for _ in range(k):
        statements.append(Concat(current, current))
        current = len(statements)
    return Slp.from_statements(statements, root=current)


# ---------------------------------------------------------------------- text format
_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\", "'": "'"}
_REVERSE_ESCAPES = {"\n": "\\n", "\t": "\\t", "\r": "\\r", "\\": "\\\\"}


def _decode_char(body: str, line_number: int) -> str:
    if len(body) == 1:
        return body
    if body.startswith("\\"):
        code = body[1:]
        if code in _ESCAPES:
            return _ESCAPES[code]
        if code[:1] in ("u", "U") and len(code) > 1:
            try:
                return chr(int(code[1:], 16))
            except ValueError:
                pass
    raise SlpFormatError(f"terminal must be a single character, got '{body}'", line_number)


def _encode_char(ch: str) -> str:
    if ch in _REVERSE_ESCAPES:
        return _REVERSE_ESCAPES[ch]
    if ord(ch) < 32 or ord(ch) == 127:
        return f"\\u{ord(ch):04x}"
    return ch


def _parse_id(token: str, line_number: int) -> int:
    token = token.strip()
    if not (token.isascii() and token.isdigit()) or int(token) < 1:
        raise SlpFormatError(f"expected a positive integer id, got '{token}'", line_number)
    return int(token)


def parse_slp(source: Union[str, Iterable[str]]) -> Slp:
    """Parse the line-oriented SLP format.

    ``# comment``, ``<id> = '<char>'``, ``<id> = <id> <id>`` and an optional final
    ``root <id>``.  Ids must be strictly increasing; they are renumbered to statement
    positions, so gaps are allowed.

    Raises:
        SlpFormatError: malformed line, duplicate id, forward or self reference, missing root.
    """
    # only "\n" ends a line; terminals may hold other Unicode line separators
    lines = source.split("\n") if isinstance(source, str) else list(source)
    statements: List[Statement] = []
    positions: Dict[int, int] = {}
    last_id = 0
    root: Optional[int] = None
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if root is not None:
            raise SlpFormatError("'root' must be the last statement", line_number)
        if line.startswith("root") and "=" not in line:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "root":
                raise SlpFormatError(f"malformed root line '{line}'", line_number)
            root_id = _parse_id(parts[1], line_number)
            if root_id not in positions:
                raise SlpFormatError(f"root {root_id} is not a declared symbol", line_number)
            root = positions[root_id]
            continue
        if "=" not in line:
            raise SlpFormatError(f"malformed statement '{line}'", line_number)
        lhs, rhs = line.split("=", 1)
        sym_id = _parse_id(lhs, line_number)
        if sym_id in positions:
            raise SlpFormatError(f"duplicate statement id {sym_id}", line_number)
        if sym_id < last_id:
            raise SlpFormatError(f"statement ids must increase, {sym_id} follows {last_id}", line_number)
        rhs = rhs.strip()
        if rhs.startswith("'"):
            if len(rhs) < 3 or not rhs.endswith("'"):
                raise SlpFormatError(f"malformed terminal '{rhs}'", line_number)
            statements.append(Terminal(_decode_char(rhs[1:-1], line_number)))
        else:
            refs = rhs.split()
            if len(refs) != 2:
                raise SlpFormatError(f"concatenation needs two ids, got '{rhs}'", line_number)
            resolved = []
            for ref in (_parse_id(tok, line_number) for tok in refs):
                if ref == sym_id:
                    raise SlpFormatError(f"statement {sym_id}: self reference", line_number)
                if ref not in positions:
                    raise SlpFormatError(f"statement {sym_id}: forward reference to {ref}", line_number)
                resolved.append(positions[ref])
            statements.append(Concat(resolved[0], resolved[1]))
        positions[sym_id] = len(statements)
        last_id = sym_id
    if not statements:
        raise SlpFormatError("missing statements and root")
    slp = Slp.from_statements(statements, root=root)
    unused = slp.unreferenced()
    if unused:
        diagnostics.warn(f"{len(unused)} unreferenced statement(s): {', '.join(map(str, unused[:10]))}")
    return slp


def serialize_slp(slp: Slp) -> str:
    """Canonical text form; ``parse_slp(serialize_slp(x)) == x``."""
    lines = []
    for r, stmt in enumerate(slp.statements, start=1):
        if isinstance(stmt, Terminal):
            lines.append(f"{r} = '{_encode_char(stmt.char)}'")
        else:
            lines.append(f"{r} = {stmt.left} {stmt.right}")
    lines.append(f"root {slp.root}")
    return "\n".join(lines) + "\n"
