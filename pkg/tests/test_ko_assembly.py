"""Assembling K- and KO-groups from Bredon homology."""

import pytest

from equiko.bredon import bredon_homology, sl3_datum
from equiko.exactlinalg import FinAbGroup
from equiko.groups import GroupId
from equiko.ko_assembly import (
    KO_POINT,
    GradedGroup,
    collapse_complex,
    ensure_ko_hypothesis,
    ko_column_collapse,
    ko_e2_page,
    ko_from_bredon,
    kunneth_times_z2,
)

Z = FinAbGroup.free(1)
Z2 = FinAbGroup.of(0, [2])
ZERO = FinAbGroup.zero()


# -- graded groups -----------------------------------------------------------------


def test_ko_point_values():
    assert [str(KO_POINT.entry(n)) for n in range(8)] == [
        "Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0",
    ]
    assert KO_POINT.entry(8) == Z  # periodicity
    assert KO_POINT.entry(-4) == Z


def test_k_pair_periodicity():
    gg = GradedGroup.k_pair(FinAbGroup.free(3), Z)
    assert gg.entry(0) == FinAbGroup.free(3)
    assert gg.entry(7) == Z
    assert gg.entry(10) == FinAbGroup.free(3)


def test_graded_group_validation():
    with pytest.raises(ValueError):
        GradedGroup(5, (Z,) * 5)
    with pytest.raises(ValueError):
        GradedGroup(8, (Z,) * 3)


# -- collapse ----------------------------------------------------------------------


def test_collapse_low_dimensional_complex():
    k0, k1 = collapse_complex([FinAbGroup.free(10), ZERO, Z])
    assert (str(k0), str(k1)) == ("Z^11", "0")
    k0, k1 = collapse_complex([FinAbGroup.free(4)])
    assert (str(k0), str(k1)) == ("Z^4", "0")
    k0, k1 = collapse_complex([Z, FinAbGroup.free(2), Z])
    assert (str(k0), str(k1)) == ("Z^2", "Z^2")


def test_collapse_keeps_torsion():
    k0, k1 = collapse_complex([FinAbGroup.of(1, [2]), FinAbGroup.of(0, [3])])
    assert (str(k0), str(k1)) == ("Z + Z/2", "Z/3")


def test_collapse_rejects_high_homology():
    with pytest.raises(ValueError):
        collapse_complex([Z, ZERO, ZERO, Z])


# -- the KO page -------------------------------------------------------------------


def test_page_rows_for_free_homology():
    page = ko_e2_page([Z, Z])
    # rows q = 0, 4 mod 8 carry the homology itself
    assert page.entry(0, 0) == Z and page.entry(1, 0) == Z
    assert page.entry(0, 4) == Z and page.entry(1, 4) == Z
    # rows q = 1, 2 mod 8 carry mod-2 reductions
    assert page.entry(0, 1) == Z2
    assert page.entry(1, 2) == Z2
    assert page.entry(0, 3) == ZERO
    assert page.entry(1, 5) == ZERO


def test_page_tor_contribution():
    # torsion in degree p-1 contributes to column p in rows 1 and 2
    h = [FinAbGroup.of(0, [2]), ZERO]
    page = ko_e2_page(h)
    assert page.entry(0, 1) == Z2  # tensor from H0
    assert page.entry(1, 1) == Z2  # tor from H0
    assert page.entry(1, 0) == ZERO


def test_page_positions_bounded():
    page = ko_e2_page([FinAbGroup.free(8), ZERO, ZERO, ZERO])
    positions = page.nonzero_positions()
    assert all(p == 0 for p, _ in positions)


def test_page_row_structure_invariant():
    import random

    from equiko.exactlinalg import tensor_z2, tor_z2

    rng = random.Random(1618)
    for _ in range(30):
        h = [
            FinAbGroup.of(
                rng.randint(0, 3),
                [rng.choice([2, 3, 4, 6]) for _ in range(rng.randint(0, 2))],
            )
            for _ in range(rng.randint(1, 4))
        ]
        page = ko_e2_page(h)
        for p in range(len(h) + 1):
            h_p = h[p] if p < len(h) else ZERO
            h_below = h[p - 1] if 0 <= p - 1 < len(h) else ZERO
            assert page.entry(p, 0) == h_p
            assert page.entry(p, 4) == h_p
            for q in (3, 5, 6, 7):
                assert page.entry(p, q) == ZERO
            expected = FinAbGroup.of(
                0,
                list(tensor_z2(h_p).torsion) + list(tor_z2(h_below).torsion),
            )
            assert page.entry(p, 1) == expected
            assert page.entry(p, 2) == expected


def test_column_collapse_single_column():
    gg = ko_column_collapse(ko_e2_page([FinAbGroup.free(8), ZERO, ZERO, ZERO]))
    assert [str(gg.entry(n)) for n in range(8)] == [
        "Z^8",
        "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2",
        "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2",
        "0", "Z^8", "0", "0", "0",
    ]
    assert not gg.extension_ambiguous


def test_column_collapse_rejects_two_columns():
    with pytest.raises(ValueError) as err:
        ko_column_collapse(ko_e2_page([Z, Z]))
    assert "column" in str(err.value)


def test_ko_from_bredon_on_builtin_homology():
    gg = ko_from_bredon(bredon_homology(sl3_datum()))
    assert gg.entry(0) == FinAbGroup.free(8)
    assert gg.entry(1) == FinAbGroup.of(0, [2] * 8)
    assert gg.entry(3) == ZERO


# -- Kunneth doubling --------------------------------------------------------------


def test_kunneth_doubles_free_ranks():
    doubled = kunneth_times_z2([FinAbGroup.free(8), ZERO, Z])
    assert [str(g) for g in doubled] == ["Z^16", "0", "Z^2"]


def test_kunneth_rejects_torsion():
    with pytest.raises(ValueError):
        kunneth_times_z2([FinAbGroup.of(1, [2])])


# -- hypothesis checking -----------------------------------------------------------


def test_hypothesis_accepts_coinciding_stabilisers():
    ensure_ko_hypothesis(
        [GroupId.sym4(), GroupId.dihedral(6), GroupId.trivial(), GroupId.klein4()]
    )


def test_hypothesis_names_the_offender():
    with pytest.raises(ValueError) as err:
        ensure_ko_hypothesis([GroupId.sym4(), GroupId.cyclic(3)])
    assert "Z3" in str(err.value)


def test_hypothesis_rejects_non_group_ids():
    with pytest.raises(TypeError):
        ensure_ko_hypothesis(["S4"])
