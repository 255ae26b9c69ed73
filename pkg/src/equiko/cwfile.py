"""Text format for Gamma-CW data.

A file is UTF-8 text; `#` starts a comment, blank lines are ignored.  A
`name = ...` line (and optionally `snf_equivalent = true`) precedes the
sections.  Cells are declared per dimension:

    [cells.0]
    z = 1            # label = stabiliser name
    c1 = Z3

Boundaries out of each positive dimension with cells come either as signed
term lists through catalogued inductions,

    [boundary.1]
    y1 = +1 * c1 : triv->Z3, -1 * z : id

or as a raw integer matrix on the chain groups (rows live in the chain
group one dimension down, columns index the irreducibles of the n-cell
stabilisers in declaration order):

    [matrix.2]
    0 1 0
    1 0 0

Group names: "1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "D3", "D4", "D6", "S4",
"Zm(m)" for other cyclic orders, and a "Z2x" prefix for products with a
central Z/2 (e.g. "Z2xS4").  Induction specs are "id", "triv->Zm" or
"Zd->Zm".  `parse_cw` and `format_cw` are mutually inverse on valid data.
"""

from __future__ import annotations

import re

from .bredon import (
    BoundaryTerm,
    Cell,
    DatumError,
    GammaCWDatum,
    MatrixBoundary,
    TermBoundary,
    parse_induction_spec,
)
from .exactlinalg import IntMatrix
from .groups import GroupId, UnsupportedGroupError, parse_name


class CWFormatError(ValueError):
    """Raised for malformed Gamma-CW files."""


_SECTION_RE = re.compile(r"^\[(cells|boundary|matrix)\.(\d+)\]$")
_LABEL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TERM_RE = re.compile(r"^([+-]?1)\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.+)$")


def _parse_terms(body: str, lineno: int) -> tuple[tuple[int, str, str], ...]:
    body = body.strip()
    if not body:
        return ()
    terms = []
    for part in body.split(","):
        part = part.strip()
        m = _TERM_RE.match(part)
        if not m:
            raise CWFormatError(
                f"line {lineno}: bad boundary term {part!r} "
                "(expected '+1 * label : spec')"
            )
        sign = -1 if m.group(1) == "-1" else 1
        spec = m.group(3).strip()
        try:
            parse_induction_spec(spec)
        except (DatumError, UnsupportedGroupError) as exc:
            raise CWFormatError(f"line {lineno}: {exc}") from exc
        terms.append((sign, m.group(2), spec))
    return tuple(terms)


def parse_cw(text: str) -> GammaCWDatum:
    """Parse a Gamma-CW file into a datum (labels, stabilisers, boundaries)."""
    name: str | None = None
    snf_equivalent = False
    cells: dict[int, list[tuple[str, GroupId]]] = {}
    term_sections: dict[int, list[tuple[str, tuple]]] = {}
    matrix_sections: dict[int, list[list[int]]] = {}
    current: tuple[str, int] | None = None

    for lineno, rawline in enumerate(text.splitlines(), 1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            m = _SECTION_RE.match(line)
            if not m:
                raise CWFormatError(f"line {lineno}: bad section header {line!r}")
            kind, n = m.group(1), int(m.group(2))
            if kind != "cells" and n < 1:
                raise CWFormatError(f"line {lineno}: [{kind}.{n}] needs dimension >= 1")
            store = {"cells": cells, "boundary": term_sections, "matrix": matrix_sections}[kind]
            if n in store:
                raise CWFormatError(f"line {lineno}: duplicate section [{kind}.{n}]")
            if kind == "boundary" and n in matrix_sections or kind == "matrix" and n in term_sections:
                raise CWFormatError(
                    f"line {lineno}: dimension {n} has both term and matrix boundaries"
                )
            store[n] = []
            current = (kind, n)
            continue
        if current is None:
            if "=" not in line:
                raise CWFormatError(f"line {lineno}: expected 'key = value', got {line!r}")
            key, _, value = (x.strip() for x in line.partition("="))
            if key == "name":
                name = value
            elif key == "snf_equivalent":
                if value not in ("true", "false"):
                    raise CWFormatError(f"line {lineno}: snf_equivalent must be true/false")
                snf_equivalent = value == "true"
            else:
                raise CWFormatError(f"line {lineno}: unknown header key {key!r}")
            continue
        kind, n = current
        if kind == "cells":
            if "=" not in line:
                raise CWFormatError(f"line {lineno}: expected 'label = group'")
            label, _, group = (x.strip() for x in line.partition("="))
            if not _LABEL_RE.match(label):
                raise CWFormatError(f"line {lineno}: bad cell label {label!r}")
            try:
                gid = parse_name(group)
            except UnsupportedGroupError as exc:
                raise CWFormatError(f"line {lineno}: {exc}") from exc
            cells[n].append((label, gid))
        elif kind == "boundary":
            label, eq, body = line.partition("=")
            if not eq:
                raise CWFormatError(f"line {lineno}: expected 'label = terms'")
            term_sections[n].append((label.strip(), _parse_terms(body, lineno)))
        else:
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError as exc:
                raise CWFormatError(f"line {lineno}: bad matrix row {line!r}") from exc
            matrix_sections[n].append(row)

    if name is None:
        raise CWFormatError("missing 'name = ...' header line")
    if not cells:
        raise CWFormatError("no [cells.N] sections found")
    top = max(cells)
    for n in range(top + 1):
        if n not in cells:
            raise CWFormatError(f"missing section [cells.{n}] (dimensions must be contiguous)")

    layers = [tuple(Cell(lbl, gid) for lbl, gid in cells[n]) for n in range(top + 1)]
    ranks = [sum(c.rank() for c in layer) for layer in layers]

    for n in set(term_sections) | set(matrix_sections):
        if n > top:
            raise CWFormatError(f"boundary section for dimension {n} has no cells")

    boundaries: list[TermBoundary | MatrixBoundary] = []
    for n in range(1, top + 1):
        labels = [c.label for c in layers[n]]
        if not labels:
            if n in term_sections or n in matrix_sections:
                raise CWFormatError(f"dimension {n} has a boundary section but no cells")
            boundaries.append(TermBoundary(()))
            continue
        if n in matrix_sections:
            rows = matrix_sections[n]
            if len(rows) != ranks[n - 1]:
                raise CWFormatError(
                    f"[matrix.{n}] has {len(rows)} rows, expected {ranks[n - 1]}"
                )
            if any(len(r) != ranks[n] for r in rows):
                raise CWFormatError(f"[matrix.{n}] rows must have {ranks[n]} entries")
            flat = tuple(x for r in rows for x in r)
            boundaries.append(MatrixBoundary(IntMatrix(ranks[n - 1], ranks[n], flat)))
            continue
        if n not in term_sections:
            raise CWFormatError(f"no boundary given for dimension {n}")
        assigned = dict()
        for label, terms in term_sections[n]:
            if label not in labels:
                raise CWFormatError(f"[boundary.{n}] mentions unknown cell {label!r}")
            if label in assigned:
                raise CWFormatError(f"[boundary.{n}] assigns {label!r} twice")
            assigned[label] = terms
        missing = [lbl for lbl in labels if lbl not in assigned]
        if missing:
            raise CWFormatError(
                f"[boundary.{n}] is missing cells {missing} (write 'label =' for zero)"
            )
        boundaries.append(
            TermBoundary(
                tuple(
                    tuple(BoundaryTerm(*t) for t in assigned[lbl]) for lbl in labels
                )
            )
        )

    try:
        return GammaCWDatum(name, tuple(layers), tuple(boundaries), snf_equivalent)
    except DatumError as exc:
        raise CWFormatError(str(exc)) from exc


def format_cw(datum: GammaCWDatum) -> str:
    """Serialize a datum; `parse_cw(format_cw(d))` reproduces `d` exactly."""
    lines = [f"name = {datum.name}"]
    if datum.snf_equivalent:
        lines.append("snf_equivalent = true")
    for n, layer in enumerate(datum.cells):
        lines.append("")
        lines.append(f"[cells.{n}]")
        for c in layer:
            lines.append(f"{c.label} = {c.stabiliser.name()}")
    for n in range(1, len(datum.cells)):
        if not datum.cells[n]:
            continue
        b = datum.boundaries[n - 1]
        lines.append("")
        if isinstance(b, MatrixBoundary):
            lines.append(f"[matrix.{n}]")
            for row in b.matrix.row_list():
                lines.append(" ".join(str(x) for x in row))
        else:
            lines.append(f"[boundary.{n}]")
            for cell, terms in zip(datum.cells[n], b.terms):
                rendered = ", ".join(
                    f"{'+' if t.sign > 0 else '-'}1 * {t.target} : {t.spec}"
                    for t in terms
                )
                lines.append(f"{cell.label} = {rendered}".rstrip())
    return "\n".join(lines) + "\n"
