"""Line-oriented text formats.

Monoid file (.mon):

    monoid <name> <size>
    identity <index>
    row 0: j0 j1 ... j(size-1)
    ...
    labels: x0 x1 ...          (optional)

Hom file (.map):             Action file (.act):
    map <name>                   action <name>
    source <path>                N <path>
    target <path>                H <path>
    map: i0 i1 ...               act <h> <n> -> <m>   (one line per pair)

Extension file (.ext):       Pair file (.wact):
    extension <name>             wact <name>
    N <path>                     N <path>
    G <path>                     H <path>
    H <path>                     fiber <h>: {n n ...} {n ...}
    k: i0 i1 ...                 action <h> <n> -> <m>
    e: i0 i1 ...
    s: i0 i1 ...

Referenced paths are resolved relative to the referencing file.  Parse
errors carry the file, line and column of the offending token.
"""

from __future__ import annotations

import os

from .monoid import FiniteMonoid, FormatError, MonoidHom, check_hom, check_monoid
from .extension import SplitExtension
from .waction import ActionTable, AdmissibleRelation, WActPair

__all__ = [
    "ParseError",
    "load_monoid",
    "parse_monoid",
    "serialize_monoid",
    "load_hom",
    "serialize_hom",
    "load_action",
    "serialize_action",
    "load_extension",
    "serialize_extension",
    "load_wact_pair",
    "serialize_wact_pair",
]


class ParseError(FormatError):
    def __init__(self, message, file="<input>", line=0, col=0):
        super().__init__("%s:%d:%d: %s" % (file, line, col, message))
        self.file = file
        self.line = line
        self.col = col


class _Lines:
    """Significant lines of a file as (lineno, [(token, column)]) records."""

    def __init__(self, text, file):
        self.file = file
        self.records = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            if raw.strip() == "" or raw.lstrip().startswith("#"):
                continue
            tokens = []
            col = 0
            for piece in raw.split(" "):
                if piece != "":
                    tokens.append((piece, col + 1))
                col += len(piece) + 1
            self.records.append((lineno, tokens, raw))
        self.pos = 0

    def error(self, message, line=0, col=0):
        raise ParseError(message, self.file, line, col)

    def next(self, expect=None):
        if self.pos >= len(self.records):
            last = self.records[-1][0] if self.records else 1
            self.error("unexpected end of file (expected %s)" % (expect or "more"), last, 1)
        rec = self.records[self.pos]
        self.pos += 1
        return rec

    def done(self):
        if self.pos < len(self.records):
            lineno, tokens, _ = self.records[self.pos]
            self.error("unexpected trailing line", lineno, tokens[0][1])


def _int(lines, token, lineno, what):
    text, col = token
    try:
        return int(text)
    except ValueError:
        lines.error("%s must be an integer, got %r" % (what, text), lineno, col)


def _keyword(lines, rec, word):
    lineno, tokens, _ = rec
    if not tokens or tokens[0][0] != word:
        got = tokens[0][0] if tokens else ""
        lines.error("expected %r, got %r" % (word, got), lineno, tokens[0][1] if tokens else 1)
    return lineno, tokens


def parse_monoid(text: str, file: str = "<input>", validate: bool = True) -> FiniteMonoid:
    """Parse a monoid file.  With validate the table must satisfy the monoid
    laws (a ParseError otherwise); without, only the shape is enforced, so
    callers can report law violations themselves."""
    lines = _Lines(text, file)
    lineno, tokens = _keyword(lines, lines.next("monoid header"), "monoid")
    if len(tokens) != 3:
        lines.error("header must be 'monoid <name> <size>'", lineno, tokens[0][1])
    size = _int(lines, tokens[2], lineno, "size")
    if size < 1:
        lines.error("size must be at least 1", lineno, tokens[2][1])
    lineno, tokens = _keyword(lines, lines.next("identity line"), "identity")
    if len(tokens) != 2:
        lines.error("expected 'identity <index>'", lineno, tokens[0][1])
    identity = _int(lines, tokens[1], lineno, "identity")
    if not 0 <= identity < size:
        lines.error("identity %d out of range 0..%d" % (identity, size - 1), lineno, tokens[1][1])
    table = []
    for i in range(size):
        lineno, tokens = _keyword(lines, lines.next("row %d" % i), "row")
        if len(tokens) < 2 or not tokens[1][0].endswith(":"):
            lines.error("expected 'row %d: ...'" % i, lineno, tokens[0][1])
        got = tokens[1][0][:-1]
        if got != str(i):
            lines.error("expected row %d, got row %s" % (i, got), lineno, tokens[1][1])
        entries = tokens[2:]
        if len(entries) != size:
            lines.error(
                "row %d has %d entries, expected %d" % (i, len(entries), size),
                lineno,
                tokens[1][1],
            )
        row = []
        for tok in entries:
            v = _int(lines, tok, lineno, "table entry")
            if not 0 <= v < size:
                lines.error("entry %d out of range 0..%d" % (v, size - 1), lineno, tok[1])
            row.append(v)
        table.append(tuple(row))
    labels = None
    if lines.pos < len(lines.records) and lines.records[lines.pos][1][0][0] == "labels:":
        lineno, tokens, _ = lines.next()
        labels = tuple(tok[0] for tok in tokens[1:])
        if len(labels) != size:
            lines.error("expected %d labels, got %d" % (size, len(labels)), lineno, tokens[0][1])
    lines.done()
    if not validate:
        return FiniteMonoid(size, identity, tuple(table), labels)
    verdict = check_monoid(tuple(table), identity, labels)
    if not verdict.ok:
        bad = verdict.violations[0]
        lines.error("table is not a monoid (%s)" % (bad,), lineno, 1)
    return verdict.value


def serialize_monoid(M: FiniteMonoid, name: str = "m") -> str:
    out = ["monoid %s %d" % (name, M.size), "identity %d" % M.identity]
    for i in range(M.size):
        out.append("row %d: %s" % (i, " ".join(str(v) for v in M.table[i])))
    if M.labels is not None:
        out.append("labels: %s" % " ".join(M.labels))
    return "\n".join(out) + "\n"


def load_monoid(path: str, validate: bool = True) -> FiniteMonoid:
    with open(path, encoding="utf-8") as fh:
        return parse_monoid(fh.read(), path, validate)


def _reference(lines, rec, word, base_dir):
    lineno, tokens = _keyword(lines, rec, word)
    if len(tokens) < 2:
        lines.error("expected '%s <path>'" % word, lineno, tokens[0][1])
    _, _, raw = rec
    path = raw.split(None, 1)[1].strip()
    full = path if os.path.isabs(path) else os.path.join(base_dir, path)
    try:
        return load_monoid(full), path
    except OSError as exc:
        lines.error("cannot read %r (%s)" % (path, exc), lineno, tokens[1][1])


def _map_line(lines, rec, word, size, bound):
    lineno, tokens = _keyword(lines, rec, word)
    entries = tokens[1:]
    if len(entries) != size:
        lines.error(
            "%s has %d entries, expected %d" % (word, len(entries), size),
            lineno,
            tokens[0][1],
        )
    values = []
    for tok in entries:
        v = _int(lines, tok, lineno, "map entry")
        if not 0 <= v < bound:
            lines.error("entry %d out of range 0..%d" % (v, bound - 1), lineno, tok[1])
        values.append(v)
    return tuple(values)


def load_hom(path: str, validate: bool = True) -> MonoidHom:
    """Load a hom file.  With validate the map must satisfy the hom laws
    (a ParseError otherwise); without, only the shape is enforced, so
    callers can report law violations themselves."""
    base = os.path.dirname(os.path.abspath(path))
    with open(path, encoding="utf-8") as fh:
        lines = _Lines(fh.read(), path)
    _keyword(lines, lines.next("map header"), "map")
    source, _ = _reference(lines, lines.next("source"), "source", base)
    target, _ = _reference(lines, lines.next("target"), "target", base)
    rec = lines.next("map:")
    lineno = rec[0]
    m = _map_line(lines, rec, "map:", source.size, target.size)
    lines.done()
    if not validate:
        return MonoidHom(source, target, m)
    verdict = check_hom(source, target, m)
    if not verdict.ok:
        lines.error("map is not a hom (%s)" % (verdict.violations[0],), lineno, 1)
    return verdict.value


def serialize_hom(f: MonoidHom, source_path: str, target_path: str, name: str = "f") -> str:
    return "\n".join(
        [
            "map %s" % name,
            "source %s" % source_path,
            "target %s" % target_path,
            "map: %s" % " ".join(str(v) for v in f.map),
        ]
    ) + "\n"


def _act_lines(lines, N, H, word="act"):
    table = [[None] * N.size for _ in range(H.size)]
    remaining = N.size * H.size
    while remaining:
        lineno, tokens = _keyword(lines, lines.next("%s line" % word), word)
        if len(tokens) != 5 or tokens[3][0] != "->":
            lines.error("expected '%s <h> <n> -> <m>'" % word, lineno, tokens[0][1])
        h = _int(lines, tokens[1], lineno, "h")
        n = _int(lines, tokens[2], lineno, "n")
        m = _int(lines, tokens[4], lineno, "m")
        if not 0 <= h < H.size:
            lines.error("h = %d out of range" % h, lineno, tokens[1][1])
        if not 0 <= n < N.size:
            lines.error("n = %d out of range" % n, lineno, tokens[2][1])
        if not 0 <= m < N.size:
            lines.error("m = %d out of range" % m, lineno, tokens[4][1])
        if table[h][n] is not None:
            lines.error("duplicate entry for (%d, %d)" % (h, n), lineno, tokens[1][1])
        table[h][n] = m
        remaining -= 1
    return tuple(tuple(row) for row in table)


def load_action(path: str) -> ActionTable:
    base = os.path.dirname(os.path.abspath(path))
    with open(path, encoding="utf-8") as fh:
        lines = _Lines(fh.read(), path)
    _keyword(lines, lines.next("action header"), "action")
    N, _ = _reference(lines, lines.next("N"), "N", base)
    H, _ = _reference(lines, lines.next("H"), "H", base)
    act = _act_lines(lines, N, H)
    lines.done()
    return ActionTable(N, H, act)


def serialize_action(a: ActionTable, n_path: str, h_path: str, name: str = "a") -> str:
    out = ["action %s" % name, "N %s" % n_path, "H %s" % h_path]
    for h in a.H.elements:
        for n in a.N.elements:
            out.append("act %d %d -> %d" % (h, n, a.act[h][n]))
    return "\n".join(out) + "\n"


def load_extension(path: str) -> SplitExtension:
    base = os.path.dirname(os.path.abspath(path))
    with open(path, encoding="utf-8") as fh:
        lines = _Lines(fh.read(), path)
    _keyword(lines, lines.next("extension header"), "extension")
    N, _ = _reference(lines, lines.next("N"), "N", base)
    G, _ = _reference(lines, lines.next("G"), "G", base)
    H, _ = _reference(lines, lines.next("H"), "H", base)
    k = _map_line(lines, lines.next("k:"), "k:", N.size, G.size)
    e = _map_line(lines, lines.next("e:"), "e:", G.size, H.size)
    s = _map_line(lines, lines.next("s:"), "s:", H.size, G.size)
    lines.done()
    return SplitExtension(
        N, G, H, MonoidHom(N, G, k), MonoidHom(G, H, e), MonoidHom(H, G, s)
    )


def serialize_extension(
    ext: SplitExtension, n_path: str, g_path: str, h_path: str, name: str = "e"
) -> str:
    return "\n".join(
        [
            "extension %s" % name,
            "N %s" % n_path,
            "G %s" % g_path,
            "H %s" % h_path,
            "k: %s" % " ".join(str(v) for v in ext.k.map),
            "e: %s" % " ".join(str(v) for v in ext.e.map),
            "s: %s" % " ".join(str(v) for v in ext.s.map),
        ]
    ) + "\n"


def load_wact_pair(path: str) -> WActPair:
    base = os.path.dirname(os.path.abspath(path))
    with open(path, encoding="utf-8") as fh:
        lines = _Lines(fh.read(), path)
    _keyword(lines, lines.next("wact header"), "wact")
    N, _ = _reference(lines, lines.next("N"), "N", base)
    H, _ = _reference(lines, lines.next("H"), "H", base)
    fibers = [None] * H.size
    for _ in range(H.size):
        lineno, tokens = _keyword(lines, lines.next("fiber line"), "fiber")
        if len(tokens) < 2 or not tokens[1][0].endswith(":"):
            lines.error("expected 'fiber <h>: {...} ...'", lineno, tokens[0][1])
        h = _int(lines, (tokens[1][0][:-1], tokens[1][1]), lineno, "fiber index")
        if not 0 <= h < H.size:
            lines.error("fiber index %d out of range" % h, lineno, tokens[1][1])
        if fibers[h] is not None:
            lines.error("duplicate fiber %d" % h, lineno, tokens[1][1])
        ids = [None] * N.size
        block = -1
        for tok, col in tokens[2:]:
            word = tok
            while word.startswith("{"):
                block += 1
                word = word[1:]
            closes = 0
            while word.endswith("}"):
                closes += 1
                word = word[:-1]
            if word == "":
                lines.error("empty token in fiber", lineno, col)
            if block < 0:
                lines.error("fiber members must be inside {...}", lineno, col)
            try:
                n = int(word)
            except ValueError:
                lines.error("fiber member must be an integer, got %r" % word, lineno, col)
            if not 0 <= n < N.size:
                lines.error("fiber member %d out of range" % n, lineno, col)
            if ids[n] is not None:
                lines.error("element %d listed twice in fiber %d" % (n, h), lineno, col)
            ids[n] = block
        if any(v is None for v in ids):
            missing = next(i for i, v in enumerate(ids) if v is None)
            lines.error("fiber %d does not cover element %d" % (h, missing), lineno, tokens[0][1])
        fibers[h] = tuple(ids)
    act = _act_lines(lines, N, H, word="action")
    lines.done()
    return WActPair(AdmissibleRelation(N, H, tuple(fibers)), ActionTable(N, H, act))


def serialize_wact_pair(p: WActPair, n_path: str, h_path: str, name: str = "p") -> str:
    out = ["wact %s" % name, "N %s" % n_path, "H %s" % h_path]
    for h in p.H.elements:
        blocks = " ".join("{%s}" % " ".join(str(n) for n in b) for b in p.E.blocks(h))
        out.append("fiber %d: %s" % (h, blocks))
    for h in p.H.elements:
        for n in p.N.elements:
            out.append("action %d %d -> %d" % (h, n, p.alpha.act[h][n]))
    return "\n".join(out) + "\n"
