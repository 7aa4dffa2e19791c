"""Covering text-file format: parsing and canonical printing.

Format, bit-exact:

* UTF-8 text. Lines whose first non-blank character is ``#`` are
  comments; blank lines are ignored.
* An optional first non-comment line ``universe: a b c`` declares the
  element labels in order. Without it the universe is inferred as the
  union of the blocks, ordered by first appearance.
* Every other non-comment, non-blank line is one block: labels separated
  by whitespace.
* Duplicate blocks are collapsed with a warning; a file with no block
  lines is an error.

The canonical printer always emits the universe line, then the blocks in
canonical order, space-separated, with a trailing newline, so printing is
byte-stable and parse/print round-trips to an equal covering.
"""

from .core import Covering, CoveringError, build_covering, canonical_form

__all__ = [
    "ParseError",
    "UnprintableLabel",
    "format_covering",
    "parse_covering_file",
    "parse_covering_text",
    "write_covering",
]


class ParseError(CoveringError):
    """A covering file is malformed; the message carries the line number."""


class UnprintableLabel(CoveringError):
    """A label cannot survive the text format (whitespace, leading '#',
    or the reserved word 'universe:')."""


def parse_covering_text(text: str) -> tuple[Covering, list[str]]:
    """Parse covering file content.

    Returns the covering and a list of human-readable warnings (one per
    collapsed duplicate block, with line numbers).
    """
    declared = None
    block_rows: list[tuple[int, list[str]]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "universe:":
            if seen_content:
                raise ParseError(
                    f"line {lineno}: universe line must be the first non-comment line"
                )
            if len(tokens) == 1:
                raise ParseError(f"line {lineno}: universe line declares no elements")
            declared = tokens[1:]
            seen_content = True
            continue
        seen_content = True
        block_rows.append((lineno, tokens))
    if not block_rows:
        raise ParseError("no blocks: a covering file needs at least one block line")

    if declared is not None:
        known = set(declared)
        if len(known) != len(declared):
            raise ParseError("universe line repeats a label")
        for lineno, tokens in block_rows:
            for tok in tokens:
                if tok not in known:
                    raise ParseError(f"line {lineno}: unknown label {tok!r}")
        labels = declared
    else:
        labels = []
        seen = set()
        for _, tokens in block_rows:
            for tok in tokens:
                if tok not in seen:
                    seen.add(tok)
                    labels.append(tok)

    warnings_out = []
    first_line: dict[frozenset, int] = {}
    blocks = []
    for lineno, tokens in block_rows:
        key = frozenset(tokens)
        if key in first_line:
            warnings_out.append(
                f"line {lineno}: duplicate block {{{' '.join(sorted(key))}}} "
                f"collapsed (first seen on line {first_line[key]})"
            )
            continue
        first_line[key] = lineno
        blocks.append(tokens)
    return build_covering(labels, blocks), warnings_out


def parse_covering_file(path) -> tuple[Covering, list[str]]:
    """Parse a covering file from disk; see ``parse_covering_text``."""
    with open(path, encoding="utf-8") as fh:
        return parse_covering_text(fh.read())


def _printable(label: str) -> str:
    if any(ch.isspace() for ch in label) or label.startswith("#") or label == "universe:":
        raise UnprintableLabel(f"label {label!r} cannot be written in the text format")
    return label


def format_covering(c: Covering) -> str:
    """Canonical text form: universe line, canonical blocks, trailing newline."""
    lines = ["universe: " + " ".join(_printable(lab) for lab in c.universe.labels)]
    for b in canonical_form(c).blocks:
        lines.append(" ".join(c.universe.labels_of(b.mask)))
    return "\n".join(lines) + "\n"


def write_covering(c: Covering, path) -> None:
    """Write the canonical text form; byte-identical for equal coverings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_covering(c))
