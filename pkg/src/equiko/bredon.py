"""Bredon homology of Gamma-CW complexes with representation-ring coefficients.

A `GammaCWDatum` records one cell per orbit together with its stabiliser
(one of the catalogue groups) and, for every positive dimension, either a
signed term list describing how each cell's boundary hits lower cells
through catalogued inductions, or a raw integer matrix.  `expand` turns this
into an honest integer chain complex: the chain group in degree n is the
direct sum of the complex representation rings of the n-cell stabilisers,
and each boundary block is sign * (induction matrix).  Homology is then
Smith-normal-form arithmetic, never a table lookup.

Three families of data are built here:

* the 4-dimensional complex for SL_3(Z), whose boundaries are stored in a
  unimodularly equivalent normal form (`snf_equivalent=True`) -- pivot
  blocks of ranks 18, 10, 1 with unit invariant factors;
* fundamental-polygon complexes for cocompact Fuchsian signatures;
* graphs of groups for finite-covolume signatures, and their central Z/2
  extensions (free stabilisers lift to Z/2, cone stabilisers Z/m to Z/2m,
  every edge carrying the same central Z/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactlinalg import FinAbGroup, IntChainComplex, IntMatrix, all_homology
from .fuchsian import Signature
from .groups import GroupId, complex_irreducible_count, parse_name
from .reprings import cyclic_induction, induction_from_trivial


class DatumError(ValueError):
    """Raised when Gamma-CW data is internally inconsistent."""


@dataclass(frozen=True)
class Cell:
    """One orbit of cells: a label and the stabiliser of a representative."""

    label: str
    stabiliser: GroupId

    def rank(self) -> int:
        return complex_irreducible_count(self.stabiliser)


@dataclass(frozen=True)
class BoundaryTerm:
    """One signed summand `sign * target : spec` of a cell boundary."""

    sign: int
    target: str
    spec: str

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DatumError(f"boundary coefficients must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class TermBoundary:
    """Boundaries of one dimension as term lists, aligned with the cell order."""

    terms: tuple[tuple[BoundaryTerm, ...], ...]


@dataclass(frozen=True)
class MatrixBoundary:
    """Boundaries of one dimension as an explicit matrix on chain groups."""

    matrix: IntMatrix


def parse_induction_spec(spec: str) -> tuple[str, GroupId | None, GroupId | None]:
    """Split an induction spec into (kind, source, target).

    Kinds: "id"; "triv" (induction from the trivial group, target cyclic);
    "cyclic" (induction along a cyclic inclusion).
    """
    spec = spec.strip()
    if spec == "id":
        return ("id", None, None)
    if "->" in spec:
        left, right = (part.strip() for part in spec.split("->", 1))
        target = parse_name(right)
        if target.kind != "cyclic":
            raise DatumError(f"induction target in {spec!r} must be cyclic")
        if left == "triv":
            return ("triv", None, target)
        source = parse_name(left)
        if source.kind != "cyclic":
            raise DatumError(f"induction source in {spec!r} must be cyclic")
        return ("cyclic", source, target)
    raise DatumError(f"malformed induction spec {spec!r}")


def _resolve_spec(spec: str, source: GroupId, target: GroupId) -> IntMatrix:
    """Check an induction spec against actual stabilisers; return its matrix."""
    kind, spec_source, spec_target = parse_induction_spec(spec)
    if kind == "id":
        if source != target:
            raise DatumError(
                f"'id' between different stabilisers {source.name()} and {target.name()}"
            )
        return IntMatrix.identity(complex_irreducible_count(source))
    if spec_target != target:
        raise DatumError(
            f"spec {spec!r} targets {spec_target.name()} but the cell has "
            f"stabiliser {target.name()}"
        )
    if kind == "triv":
        if not source.is_trivial_group():
            raise DatumError(
                f"spec {spec!r} needs a trivial stabiliser, found {source.name()}"
            )
        return induction_from_trivial(target.m).matrix
    if spec_source != source:
        raise DatumError(
            f"spec {spec!r} starts at {spec_source.name()} but the cell has "
            f"stabiliser {source.name()}"
        )
    if target.m % source.m != 0:
        raise DatumError(f"spec {spec!r} is not a subgroup inclusion")
    return cyclic_induction(source.m, target.m).matrix


@dataclass(frozen=True)
class GammaCWDatum:
    """A finite Gamma-CW structure with catalogue stabilisers.

    `cells[n]` lists the n-cells; `boundaries[n-1]` describes the boundary
    map out of dimension n (term lists or a raw matrix).  Data whose
    boundaries are only unimodularly equivalent to the geometric ones is
    flagged `snf_equivalent`; homology is unaffected.
    """

    name: str
    cells: tuple[tuple[Cell, ...], ...]
    boundaries: tuple[TermBoundary | MatrixBoundary, ...]
    snf_equivalent: bool = False

    def __post_init__(self):
        if not self.cells:
            raise DatumError("a datum needs at least dimension 0")
        if len(self.boundaries) != len(self.cells) - 1:
            raise DatumError(
                f"expected {len(self.cells) - 1} boundary descriptions, "
                f"got {len(self.boundaries)}"
            )
        for dim, layer in enumerate(self.cells):
            labels = [c.label for c in layer]
            if len(set(labels)) != len(labels):
                raise DatumError(f"duplicate cell labels in dimension {dim}")
        for n, b in enumerate(self.boundaries, start=1):
            if isinstance(b, MatrixBoundary):
                rows = sum(c.rank() for c in self.cells[n - 1])
                cols = sum(c.rank() for c in self.cells[n])
                if (b.matrix.rows, b.matrix.cols) != (rows, cols):
                    raise DatumError(
                        f"matrix for the boundary out of dimension {n} is "
                        f"{b.matrix.rows}x{b.matrix.cols}, expected {rows}x{cols}"
                    )
                continue
            if len(b.terms) != len(self.cells[n]):
                raise DatumError(
                    f"dimension {n} has {len(self.cells[n])} cells but "
                    f"{len(b.terms)} term lists"
                )
            below = {c.label: c.stabiliser for c in self.cells[n - 1]}
            for cell, terms in zip(self.cells[n], b.terms):
                for term in terms:
                    if term.target not in below:
                        raise DatumError(
                            f"boundary of {cell.label!r} hits unknown "
                            f"{n - 1}-cell {term.target!r}"
                        )
                    _resolve_spec(term.spec, cell.stabiliser, below[term.target])

    @classmethod
    def build(cls, name, cells, boundaries, snf_equivalent=False) -> "GammaCWDatum":
        """Friendly constructor.

        `cells`: list (by dimension) of [(label, GroupId), ...].
        `boundaries`: dict dimension -> either {label: [(sign, target, spec), ...]}
        or an IntMatrix.
        """
        cell_layers = tuple(
            tuple(Cell(label, gid) for label, gid in layer) for layer in cells
        )
        packed = []
        for n in range(1, len(cell_layers)):
            raw = boundaries.get(n)
            if isinstance(raw, IntMatrix):
                packed.append(MatrixBoundary(raw))
                continue
            raw = raw or {}
            unknown = set(raw) - {c.label for c in cell_layers[n]}
            if unknown:
                raise DatumError(
                    f"boundary given for unknown {n}-cells {sorted(unknown)}"
                )
            packed.append(
                TermBoundary(
                    tuple(
                        tuple(BoundaryTerm(*t) for t in raw.get(c.label, ()))
                        for c in cell_layers[n]
                    )
                )
            )
        return cls(name, cell_layers, tuple(packed), snf_equivalent)

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    def ranks(self) -> tuple[int, ...]:
        return tuple(sum(c.rank() for c in layer) for layer in self.cells)

    def stabilisers(self) -> list[GroupId]:
        """All stabilisers, deduplicated, in order of first appearance."""
        seen: list[GroupId] = []
        for layer in self.cells:
            for c in layer:
                if c.stabiliser not in seen:
                    seen.append(c.stabiliser)
        return seen


def expand(datum: GammaCWDatum) -> IntChainComplex:
    """Expand a datum into the integer chain complex of representation rings."""
    ranks = datum.ranks()
    offsets: list[dict[str, tuple[int, GroupId]]] = []
    for layer in datum.cells:
        table: dict[str, tuple[int, GroupId]] = {}
        pos = 0
        for c in layer:
            table[c.label] = (pos, c.stabiliser)
            pos += c.rank()
        offsets.append(table)

    matrices = []
    for n in range(1, len(datum.cells)):
        b = datum.boundaries[n - 1]
        rows, cols = ranks[n - 1], ranks[n]
        if isinstance(b, MatrixBoundary):
            if (b.matrix.rows, b.matrix.cols) != (rows, cols):
                raise DatumError(
                    f"matrix for the boundary out of dimension {n} is "
                    f"{b.matrix.rows}x{b.matrix.cols}, expected {rows}x{cols}"
                )
            matrices.append(b.matrix)
            continue
        block = [[0] * cols for _ in range(rows)]
        for cell, terms in zip(datum.cells[n], b.terms):
            col_off, source = offsets[n][cell.label]
            for term in terms:
                if term.target not in offsets[n - 1]:
                    raise DatumError(
                        f"boundary of {cell.label!r} hits unknown "
                        f"{n - 1}-cell {term.target!r}"
                    )
                row_off, target = offsets[n - 1][term.target]
                ind = _resolve_spec(term.spec, source, target)
                for i in range(ind.rows):
                    for j in range(ind.cols):
                        block[row_off + i][col_off + j] += term.sign * ind.entry(i, j)
        matrices.append(
            IntMatrix(rows, cols, tuple(x for row in block for x in row))
        )
    return IntChainComplex(tuple(ranks), tuple(matrices))


def bredon_homology(datum: GammaCWDatum) -> list[FinAbGroup]:
    """Bredon homology in degrees 0..dimension, by Smith normal form."""
    return all_homology(expand(datum))


# ---------------------------------------------------------------------------
# The SL_3(Z) complex

_SL3_VERTEX_STABILISERS = ("S4", "D6", "S4", "D4", "S4")
_SL3_EDGE_STABILISERS = ("Z2xZ2", "D3", "D3", "Z2", "Z2", "Z2xZ2", "D4", "D4")
_SL3_FACE_STABILISERS = ("Z2", "1", "Z2xZ2", "Z2", "Z2")


def _pivot_block(rows: int, cols: int, count: int, row_offset: int = 0) -> IntMatrix:
    entries = [0] * (rows * cols)
    for i in range(count):
        entries[(row_offset + i) * cols + i] = 1
    return IntMatrix(rows, cols, tuple(entries))


@lru_cache(maxsize=1)
def sl3_datum() -> GammaCWDatum:
    """The Gamma-CW datum for SL_3(Z) acting on its classifying space.

    Five orbits of vertices, eight of edges, five of 2-cells and one 3-cell;
    chain ranks 26, 28, 11, 1.  The boundary matrices are stored in the
    unimodularly equivalent normal form (rank-18, rank-10 and rank-1 unit
    pivot blocks), so homology computed from them by Smith normal form is
    the homology of the geometric complex.
    """
    cells = [
        [(f"v{i + 1}", parse_name(s)) for i, s in enumerate(_SL3_VERTEX_STABILISERS)],
        [(f"e{i + 1}", parse_name(s)) for i, s in enumerate(_SL3_EDGE_STABILISERS)],
        [(f"t{i + 1}", parse_name(s)) for i, s in enumerate(_SL3_FACE_STABILISERS)],
        [("T1", GroupId.trivial())],
    ]
    # Degree ranks: 26 <- 28 <- 11 <- 1.  The boundary out of dimension 1
    # has rank 18 (unit pivots in the first 18 rows); the boundary out of
    # dimension 2 has rank 10, supported on the complementary 10 rows; the
    # 3-cell hits the leftover 2-chain coordinate.
    d1 = _pivot_block(26, 28, 18)
    d2 = _pivot_block(28, 11, 10, row_offset=18)
    d3 = _pivot_block(11, 1, 1, row_offset=10)
    return GammaCWDatum.build(
        "sl3", cells, {1: d1, 2: d2, 3: d3}, snf_equivalent=True
    )


def sl3_stabiliser_ids() -> list[GroupId]:
    return sl3_datum().stabilisers()


# ---------------------------------------------------------------------------
# Fuchsian data


def _cyclic_name(m: int) -> str:
    return GroupId.cyclic(m).name()


def fuchsian_cocompact_datum(sig: Signature) -> GammaCWDatum:
    """Fundamental-polygon datum for a cocompact signature [g, 0; m_1..m_r].

    One free vertex, one cone vertex per period; 2g free loops and one edge
    into each cone vertex; a single free 2-cell whose polygon boundary
    traverses every edge twice with opposite orientations, so its chain
    boundary cancels to zero term by term.
    """
    if not sig.is_cocompact():
        raise DatumError("cocompact datum needs s = 0")
    vertices = [("z", GroupId.trivial())]
    vertices += [(f"c{j + 1}", GroupId.cyclic(m)) for j, m in enumerate(sig.periods)]
    edges = []
    edge_bounds = {}
    for i in range(2 * sig.g):
        label = f"a{i + 1}"
        edges.append((label, GroupId.trivial()))
        edge_bounds[label] = [(1, "z", "id"), (-1, "z", "id")]
    for j, m in enumerate(sig.periods):
        label = f"y{j + 1}"
        edges.append((label, GroupId.trivial()))
        edge_bounds[label] = [
            (1, f"c{j + 1}", f"triv->{_cyclic_name(m)}"),
            (-1, "z", "id"),
        ]
    face_terms = []
    for label, _ in edges:
        face_terms += [(1, label, "id"), (-1, label, "id")]
    return GammaCWDatum.build(
        f"fuchsian{sig}",
        [vertices, edges, [("w", GroupId.trivial())]],
        {1: edge_bounds, 2: {"w": face_terms}},
    )


@dataclass(frozen=True)
class GraphEdge:
    """An edge of a graph of groups; `head` gets +1, `tail` gets -1.

    Each endpoint is (vertex label, induction spec) for the embedding of the
    edge group into that vertex group.
    """

    label: str
    group: GroupId
    head: tuple[str, str]
    tail: tuple[str, str]


@dataclass(frozen=True)
class GraphOfGroupsDatum:
    """A finite graph of catalogue groups, expandable as a 1-dimensional datum."""

    name: str
    vertices: tuple[Cell, ...]
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        by_label = {v.label: v for v in self.vertices}
        if len(by_label) != len(self.vertices):
            raise DatumError("duplicate vertex labels")
        for e in self.edges:
            for vertex_label, spec in (e.head, e.tail):
                if vertex_label not in by_label:
                    raise DatumError(
                        f"edge {e.label!r} ends at unknown vertex {vertex_label!r}"
                    )
                # Raises if the edge group does not embed as specified.
                _resolve_spec(spec, e.group, by_label[vertex_label].stabiliser)

    def to_cw_datum(self) -> GammaCWDatum:
        edge_bounds = {
            e.label: [(1, e.head[0], e.head[1]), (-1, e.tail[0], e.tail[1])]
            for e in self.edges
        }
        return GammaCWDatum.build(
            self.name,
            [
                [(v.label, v.stabiliser) for v in self.vertices],
                [(e.label, e.group) for e in self.edges],
            ],
            {1: edge_bounds},
        )


def fuchsian_graph_of_groups(sig: Signature) -> GraphOfGroupsDatum:
    """Graph of groups for a finite-covolume signature [g, s >= 1; m_1..m_r].

    One free vertex carrying 2g + s - 1 loops, plus one pendant edge from it
    into each cone vertex Z/m_j.
    """
    if sig.is_cocompact():
        raise DatumError("graph-of-groups datum needs s >= 1")
    vertices = [Cell("z", GroupId.trivial())]
    vertices += [
        Cell(f"p{j + 1}", GroupId.cyclic(m)) for j, m in enumerate(sig.periods)
    ]
    edges = []
    for i in range(2 * sig.g + sig.s - 1):
        edges.append(
            GraphEdge(f"l{i + 1}", GroupId.trivial(), ("z", "id"), ("z", "id"))
        )
    for j, m in enumerate(sig.periods):
        edges.append(
            GraphEdge(
                f"d{j + 1}",
                GroupId.trivial(),
                (f"p{j + 1}", f"triv->{_cyclic_name(m)}"),
                ("z", "id"),
            )
        )
    return GraphOfGroupsDatum(f"fuchsian{sig}", tuple(vertices), tuple(edges))


def fuchsian_noncocompact_datum(sig: Signature) -> GammaCWDatum:
    """The 1-dimensional datum of the finite-covolume graph of groups."""
    return fuchsian_graph_of_groups(sig).to_cw_datum()


def lifted_fuchsian_datum(sig: Signature) -> GammaCWDatum:
    """Central Z/2 extension of a finite-covolume signature with periods in {2,3}.

    Free stabilisers lift to Z/2, cone stabilisers Z/m to Z/2m, and every
    edge group is the same central Z/2, embedded by the catalogued cyclic
    inductions.  Chain-level homology then doubles every rank of the base
    and stays torsion-free.
    """
    if sig.is_cocompact():
        raise DatumError("the central extension datum needs s >= 1")
    if any(m not in (2, 3) for m in sig.periods):
        raise DatumError("lift is only defined for periods 2 and 3")
    z2 = GroupId.cyclic(2)
    vertices = [Cell("z", z2)]
    vertices += [
        Cell(f"p{j + 1}", GroupId.cyclic(2 * m)) for j, m in enumerate(sig.periods)
    ]
    edges = []
    for i in range(2 * sig.g + sig.s - 1):
        edges.append(GraphEdge(f"l{i + 1}", z2, ("z", "id"), ("z", "id")))
    for j, m in enumerate(sig.periods):
        edges.append(
            GraphEdge(
                f"d{j + 1}",
                z2,
                (f"p{j + 1}", f"Z2->{_cyclic_name(2 * m)}"),
                ("z", "id"),
            )
        )
    return GraphOfGroupsDatum(f"lift{sig}", tuple(vertices), tuple(edges)).to_cw_datum()
