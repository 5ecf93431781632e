"""Text formats: array catalog files and ket notation.

Catalog format (one array per file)::

    # optional comment lines
    oa <runs> <factors> <levels> [strength]
    <row as base-36 digits>
    ...

Declared parameters are always re-verified against the rows; a declared
strength that the rows do not support raises ParameterMismatch.

Ket format: terms of the form ``+|0110>``, ``-|0110>`` or
``+e^{i1.5707963267948966}|0110>`` separated by whitespace; ``#`` starts a
comment that runs to the end of the line.  Symbols are base-36 digits, so
level counts up to 36 round-trip.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ParameterMismatch, ParseError, Unsupported
from .oa import OrthogonalArray, max_strength, verify_strength
from .states import DIGITS36, PureState, _DIGIT_VALUE

_SIGN_TOL = 1e-12


@dataclass(frozen=True)
class CatalogDocument:
    """Raw pieces of a catalog file before array-level validation."""

    comments: Tuple[str, ...]
    runs: int
    factors: int
    levels: int
    strength: Optional[int]
    rows: Tuple[str, ...]


def parse_catalog(text: str) -> CatalogDocument:
    comments = []
    header = None
    header_line = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        code, _, comment = raw.partition("#")
        if comment and not code.strip():
            comments.append(comment.strip())
        line = code.strip()
        if not line:
            continue
        if header is None:
            fields = line.split()
            if fields[0] != "oa" or len(fields) not in (4, 5):
                raise ParseError(
                    "expected header 'oa <runs> <factors> <levels> [strength]'",
                    lineno)
            try:
                numbers = [int(f) for f in fields[1:]]
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            header = numbers + [None] * (5 - len(fields))
            header_line = lineno
            continue
        for col, ch in enumerate(line, start=1):
            if ch not in _DIGIT_VALUE:
                raise ParseError(f"invalid symbol {ch!r}", lineno, col)
        rows.append(line)
    if header is None:
        raise ParseError("missing 'oa' header line", header_line or 1)
    if not rows:
        raise ParseError("no rows after the header", header_line)
    return CatalogDocument(tuple(comments), header[0], header[1], header[2],
                           header[3], tuple(rows))


def parse_oa_file(text: str) -> OrthogonalArray:
    """Parse and fully re-verify a catalog file.

    Malformed text raises ParseError; well-formed text whose declared
    (runs, factors, levels, strength) disagree with the rows raises
    ParameterMismatch.
    """
    doc = parse_catalog(text)
    if len(doc.rows) != doc.runs:
        raise ParameterMismatch(
            f"header declares {doc.runs} runs, file has {len(doc.rows)}")
    cells = []
    for row in doc.rows:
        if len(row) != doc.factors:
            raise ParameterMismatch(
                f"header declares {doc.factors} factors, row {row!r} "
                f"has {len(row)}")
        digits = tuple(_DIGIT_VALUE[c] for c in row)
        if any(v >= doc.levels for v in digits):
            raise ParameterMismatch(
                f"row {row!r} uses symbols >= declared levels {doc.levels}")
        cells.append(digits)
    array = OrthogonalArray(tuple(cells), doc.levels)
    if doc.strength is not None:
        if not 0 <= doc.strength <= doc.factors or \
                not verify_strength(array, doc.strength):
            raise ParameterMismatch(
                f"rows do not have the declared strength {doc.strength}")
        array = OrthogonalArray(tuple(cells), doc.levels, doc.strength)
    return array


def write_oa_file(array: OrthogonalArray) -> str:
    """Catalog text; the header strength is the declared one when present,
    otherwise the computed maximum."""
    if array.levels > len(DIGITS36):
        raise Unsupported(
            f"catalog files encode at most {len(DIGITS36)} levels")
    k = array.strength if array.strength is not None else max_strength(array)
    lines = [f"oa {array.runs} {array.factors} {array.levels} {k}"]
    for row in array.rows:
        lines.append("".join(DIGITS36[v] for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# ket notation
# ---------------------------------------------------------------------------

def _strip_comments(text: str) -> str:
    out = []
    for line in text.splitlines():
        out.append(line.partition("#")[0])
    return "\n".join(out)


def parse_ket(text: str, levels: Optional[int] = None) -> PureState:
    """Parse ket text into a state.

    The level count is inferred as (largest symbol + 1, at least 2) unless
    given explicitly.
    """
    source = _strip_comments(text)
    terms = []
    pos = 0
    size = len(source)

    def location(p: int) -> Tuple[int, int]:
        line = source.count("\n", 0, p) + 1
        col = p - (source.rfind("\n", 0, p) + 1) + 1
        return line, col

    def fail(message: str, p: int):
        line, col = location(p)
        raise ParseError(message, line, col)

    while True:
        while pos < size and source[pos].isspace():
            pos += 1
        if pos >= size:
            break
        sign = 1.0
        if source[pos] in "+-":
            sign = 1.0 if source[pos] == "+" else -1.0
            pos += 1
            while pos < size and source[pos].isspace():
                pos += 1
        phase = complex(sign)
        if pos < size and source[pos] == "e":
            end = source.find("}", pos)
            if not source.startswith("e^{i", pos) or end == -1:
                fail("malformed phase tag; expected e^{i<angle>}", pos)
            angle_text = source[pos + 4:end]
            try:
                angle = float(angle_text)
            except ValueError:
                fail(f"bad angle {angle_text!r}", pos + 4)
            phase = sign * cmath.exp(1j * angle)
            pos = end + 1
        if pos >= size or source[pos] != "|":
            fail("expected '|' opening a ket", pos)
        pos += 1
        start = pos
        while pos < size and source[pos] in _DIGIT_VALUE:
            pos += 1
        if pos == start:
            fail("empty ket word", pos)
        if pos >= size or source[pos] != ">":
            fail("expected '>' closing the ket", pos)
        word = source[start:pos]
        pos += 1
        terms.append((word, phase))

    if not terms:
        raise ParseError("no ket terms found", 1, 1)
    n = len(terms[0][0])
    for word, _ in terms:
        if len(word) != n:
            raise ParseError(f"word {word!r} has length {len(word)}, "
                             f"expected {n}")
    inferred = max(2, max(v for w, _ in terms for v in
                          (_DIGIT_VALUE[c] for c in w)) + 1)
    d = levels if levels is not None else inferred
    return PureState(n, d, tuple(terms))


def write_ket(state: PureState) -> str:
    """One line of space-separated terms in canonical order; real +/-1
    phases use sign form, anything else an explicit e^{i<angle>} tag."""
    parts = []
    for word, phase in state.terms:
        if abs(phase - 1.0) <= _SIGN_TOL:
            parts.append(f"+|{word}>")
        elif abs(phase + 1.0) <= _SIGN_TOL:
            parts.append(f"-|{word}>")
        else:
            angle = cmath.phase(phase)
            parts.append(f"+e^{{i{angle!r}}}|{word}>")
    return " ".join(parts) + "\n"
