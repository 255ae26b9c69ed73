"""The Gamma-CW text format: parsing, serialization, round-trips."""

import pytest

from equiko.bredon import (
    bredon_homology,
    fuchsian_cocompact_datum,
    fuchsian_noncocompact_datum,
    lifted_fuchsian_datum,
    sl3_datum,
)
from equiko.cwfile import CWFormatError, format_cw, parse_cw
from equiko.fuchsian import Signature, parse_signature


def test_minimal_document():
    datum = parse_cw(
        """
        name = point
        [cells.0]
        v = S4
        """
    )
    assert datum.name == "point"
    assert datum.ranks() == (5,)
    assert [str(g) for g in bredon_homology(datum)] == ["Z^5"]


def test_terms_and_comments():
    datum = parse_cw(
        """
        # a cone over a point
        name = interval
        [cells.0]
        z = 1
        c = Z3    # cone vertex
        [cells.1]
        y = 1
        [boundary.1]
        y = +1 * c : triv->Z3, -1 * z : id
        """
    )
    assert datum.ranks() == (4, 1)
    h = bredon_homology(datum)
    assert [str(g) for g in h] == ["Z^3", "0"]


def test_roundtrip_builtin_data():
    data = [
        sl3_datum(),
        fuchsian_cocompact_datum(Signature(0, 0, (2, 3, 7))),
        fuchsian_cocompact_datum(Signature(2, 0, ())),
        fuchsian_noncocompact_datum(parse_signature("[0,1;2,3]")),
        fuchsian_noncocompact_datum(parse_signature("[1,3;2,2,3]")),
        lifted_fuchsian_datum(parse_signature("[0,2;2,3]")),
    ]
    for datum in data:
        text = format_cw(datum)
        parsed = parse_cw(text)
        assert parsed == datum
        assert format_cw(parsed) == text  # byte-identical re-emit
        assert bredon_homology(parsed) == bredon_homology(datum)


def test_matrix_sections_roundtrip():
    text = format_cw(sl3_datum())
    assert "[matrix.1]" in text and "[matrix.3]" in text
    assert "snf_equivalent = true" in text


def _expect_error(text, fragment):
    with pytest.raises(CWFormatError) as err:
        parse_cw(text)
    assert fragment in str(err.value)


def test_parse_error_unknown_group():
    _expect_error("name = x\n[cells.0]\nv = Q8\n", "unknown group")


def test_parse_error_reports_line_numbers():
    with pytest.raises(CWFormatError) as err:
        parse_cw("name = x\n[cells.0]\nv = Q8\n")
    assert "line 3" in str(err.value)


def test_parse_error_missing_name():
    _expect_error("[cells.0]\nv = 1\n", "name")


def test_parse_error_no_cells():
    _expect_error("name = x\n", "cells")


def test_parse_error_duplicate_label():
    _expect_error(
        "name = x\n[cells.0]\nv = 1\nv = Z2\n", "duplicate"
    )


def test_parse_error_gap_in_dimensions():
    _expect_error(
        "name = x\n[cells.0]\nv = 1\n[cells.2]\nf = 1\n", "contiguous"
    )


def test_parse_error_unassigned_cell():
    _expect_error(
        """
        name = x
        [cells.0]
        v = 1
        [cells.1]
        e = 1
        f = 1
        [boundary.1]
        e = +1 * v : id, -1 * v : id
        """,
        "f",
    )


def test_parse_error_bad_term():
    _expect_error(
        """
        name = x
        [cells.0]
        v = 1
        [cells.1]
        e = 1
        [boundary.1]
        e = +2 * v : id
        """,
        "term",
    )


def test_parse_error_both_boundary_and_matrix():
    _expect_error(
        """
        name = x
        [cells.0]
        v = 1
        [cells.1]
        e = 1
        [boundary.1]
        e =
        [matrix.1]
        0
        """,
        "matrix",
    )


def test_parse_error_matrix_shape():
    _expect_error(
        """
        name = x
        [cells.0]
        v = Z2
        [cells.1]
        e = 1
        [matrix.1]
        1
        """,
        "rows, expected",
    )


def test_parse_error_bad_spec():
    _expect_error(
        """
        name = x
        [cells.0]
        v = Z3
        [cells.1]
        e = Z2
        [boundary.1]
        e = +1 * v : Z2->Z3
        """,
        "Z2->Z3",
    )


def test_empty_boundary_line_allowed():
    datum = parse_cw(
        """
        name = x
        [cells.0]
        v = 1
        [cells.1]
        e = 1
        [boundary.1]
        e =
        """
    )
    h = bredon_homology(datum)
    assert [str(g) for g in h] == ["Z", "Z"]
