"""Finite group catalogue: tables, conjugacy classes, indicators."""

import cmath

import pytest

from equiko.groups import (
    CyclicCharacter,
    GroupId,
    UnsupportedGroupError,
    all_tables_coincide,
    build_group,
    character_table,
    complex_irreducible_count,
    cyclic_fs_indicator,
    fs_indicator,
    has_integer_table,
    parse_name,
)

CATALOGUE = [
    GroupId.trivial(),
    GroupId.cyclic(2),
    GroupId.cyclic(3),
    GroupId.cyclic(4),
    GroupId.cyclic(6),
    GroupId.klein4(),
    GroupId.dihedral(3),
    GroupId.dihedral(4),
    GroupId.dihedral(6),
    GroupId.sym4(),
]


# -- identifiers ---------------------------------------------------------------


def test_names_round_trip():
    for gid in CATALOGUE + [GroupId.times_z2(GroupId.dihedral(6))]:
        assert parse_name(gid.name()) == gid


def test_specific_names():
    assert GroupId.trivial().name() == "1"
    assert GroupId.cyclic(2).name() == "Z2"
    assert GroupId.cyclic(7).name() == "Zm(7)"
    assert GroupId.klein4().name() == "Z2xZ2"
    assert GroupId.dihedral(4).name() == "D4"
    assert GroupId.sym4().name() == "S4"
    assert GroupId.times_z2(GroupId.sym4()).name() == "Z2xS4"
    # the product Z2 x Z2 built as a product is the Klein group by another name
    assert GroupId.times_z2(GroupId.cyclic(2)).name() == "Z2xZm(2)"


def test_orders():
    expected = [1, 2, 3, 4, 6, 4, 6, 8, 12, 24]
    assert [g.order() for g in CATALOGUE] == expected
    assert GroupId.times_z2(GroupId.sym4()).order() == 48


def test_bad_identifiers_rejected():
    with pytest.raises(UnsupportedGroupError):
        GroupId.dihedral(5)
    with pytest.raises(UnsupportedGroupError):
        GroupId.cyclic(0)
    with pytest.raises(UnsupportedGroupError):
        GroupId.times_z2(GroupId.times_z2(GroupId.sym4()))
    with pytest.raises(UnsupportedGroupError):
        parse_name("Q8")
    with pytest.raises(UnsupportedGroupError):
        parse_name("")


# -- multiplication tables and conjugacy ----------------------------------------


def test_group_axioms_hold():
    for gid in CATALOGUE + [GroupId.times_z2(GroupId.dihedral(4))]:
        g = build_group(gid)
        n = g.order
        assert g.mult[0] == tuple(range(n))  # 0 is the identity
        for a in range(n):
            assert g.mult[a][g.inverse[a]] == 0
            # element orders are correct
            x, k = a, 1
            while x != 0:
                x = g.mult[x][a]
                k += 1
            assert g.element_order[a] == k


def test_class_partition_and_ordering():
    for gid in CATALOGUE:
        g = build_group(gid)
        flat = sorted(e for c in g.classes for e in c)
        assert flat == list(range(g.order))
        assert g.classes[0] == (0,)  # identity class first
        keys = [
            (g.element_order[c[0]], len(c), c[0]) for c in g.classes
        ]
        assert keys == sorted(keys)
        for ci, c in enumerate(g.classes):
            for e in c:
                assert g.class_index[e] == ci


def test_conjugacy_closed_under_conjugation():
    for gid in [GroupId.dihedral(6), GroupId.sym4()]:
        g = build_group(gid)
        for x in range(g.order):
            for h in range(g.order):
                conj = g.mult[g.mult[h][x]][g.inverse[h]]
                assert g.class_index[conj] == g.class_index[x]


def test_known_class_counts():
    expected = {
        "1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z6": 6,
        "Z2xZ2": 4, "D3": 3, "D4": 5, "D6": 6, "S4": 5,
    }
    for gid in CATALOGUE:
        assert len(build_group(gid).classes) == expected[gid.name()]
        assert complex_irreducible_count(gid) == expected[gid.name()]


def test_square_class_map():
    g = build_group(GroupId.dihedral(4))
    # every reflection and the rotation of order 2 square to the identity
    for ci, c in enumerate(g.classes):
        rep = c[0]
        sq = g.mult[rep][rep]
        assert g.square_class[ci] == g.class_index[sq]


# -- character tables ------------------------------------------------------------


def test_character_tables_validate():
    # construction itself runs the orthogonality checks; degrees are standard
    assert sorted(character_table(GroupId.sym4()).degrees()) == [1, 1, 2, 3, 3]
    assert sorted(character_table(GroupId.dihedral(4)).degrees()) == [1, 1, 1, 1, 2]
    assert sorted(character_table(GroupId.dihedral(6)).degrees()) == [1, 1, 1, 1, 2, 2]
    assert sorted(character_table(GroupId.dihedral(3)).degrees()) == [1, 1, 2]
    assert character_table(GroupId.klein4()).degrees() == (1, 1, 1, 1)


def test_character_table_first_orthogonality():
    for gid in ["Z2xZ2", "D3", "D4", "D6", "S4"]:
        g = build_group(parse_name(gid))
        table = character_table(g.group)
        sizes = g.class_sizes()
        k = len(table.rows)
        for i in range(k):
            for j in range(k):
                inner = sum(
                    s * a * b
                    for s, a, b in zip(sizes, table.rows[i], table.rows[j])
                )
                assert inner == (g.order if i == j else 0)


def test_degree_squares_sum_to_order():
    for gid in CATALOGUE:
        if not has_integer_table(gid):
            continue
        table = character_table(gid)
        assert sum(d * d for d in table.degrees()) == build_group(gid).order


def test_non_integral_tables_refused():
    for name in ["Z3", "Z4", "Z6"]:
        with pytest.raises(UnsupportedGroupError):
            character_table(parse_name(name))


def test_product_table_is_kronecker():
    inner = GroupId.dihedral(3)
    prod = GroupId.times_z2(inner)
    ti, tp = character_table(inner), character_table(prod)
    assert len(tp.rows) == 2 * len(ti.rows)
    assert sum(d * d for d in tp.degrees()) == 12


# -- indicators ------------------------------------------------------------------


def test_fs_indicator_all_one_for_coinciding_groups():
    for name in ["1", "Z2", "Z2xZ2", "D3", "D4", "D6", "S4"]:
        gid = parse_name(name)
        g = build_group(gid)
        for row in character_table(gid).rows:
            assert fs_indicator(g, row) == 1


def test_fs_indicator_counts_involutions():
    # sum of indicator * degree = number of solutions of x^2 = e
    for gid in ["Z2", "Z2xZ2", "D3", "D4", "D6", "S4"]:
        g = build_group(parse_name(gid))
        total = sum(
            fs_indicator(g, row) * row[0]
            for row in character_table(g.group).rows
        )
        involutions = sum(1 for x in range(g.order) if g.mult[x][x] == 0)
        assert total == involutions


def test_fs_indicator_rejects_non_character():
    g = build_group(GroupId.dihedral(3))
    with pytest.raises(ValueError):
        fs_indicator(g, (1, 1))  # wrong length
    with pytest.raises(ValueError):
        fs_indicator(g, (1, 0, 2))  # not a character: non-integral indicator


def test_cyclic_indicator_against_floating_point_sum():
    for m in range(1, 25):
        for j in range(m):
            # (1/m) sum over group elements k of chi_j(k + k)
            total = sum(
                cmath.exp(2 * cmath.pi * 1j * j * (2 * k) / m) for k in range(m)
            )
            numeric = total / m
            expected = cyclic_fs_indicator(CyclicCharacter(m, j))
            assert abs(numeric.real - expected) < 1e-9
            assert abs(numeric.imag) < 1e-9


def test_cyclic_indicator_examples():
    assert cyclic_fs_indicator(CyclicCharacter(1, 0)) == 1
    assert cyclic_fs_indicator(CyclicCharacter(2, 1)) == 1
    assert cyclic_fs_indicator(CyclicCharacter(3, 1)) == 0
    assert cyclic_fs_indicator(CyclicCharacter(4, 2)) == 1
    assert cyclic_fs_indicator(CyclicCharacter(4, 1)) == 0


# -- table coincidence ------------------------------------------------------------


def test_all_tables_coincide_exact_set():
    coinciding = {"1", "Z2", "Z2xZ2", "D3", "D4", "D6", "S4"}
    for gid in CATALOGUE:
        assert all_tables_coincide(gid) == (gid.name() in coinciding)


def test_all_tables_coincide_z2_products():
    for gid in CATALOGUE:
        prod = GroupId.times_z2(gid)
        assert all_tables_coincide(prod) == all_tables_coincide(gid)


def test_all_tables_coincide_more_cyclic():
    for m in [5, 7, 8, 9, 12, 15]:
        assert not all_tables_coincide(GroupId.cyclic(m))
