"""Assembly of K- and KO-homology from Bredon homology.

For the complexes in this package the Atiyah-Hirzebruch-style spectral
sequence degenerates in one of two ways:

* complex K: when Bredon homology vanishes in degrees >= 3, the sequence
  collapses and K_0 = H_0 + H_2, K_1 = H_1 (`collapse_complex`);
* real KO: when the Bredon homology is concentrated in column p = 0 of the
  E^2 page with KO-point coefficients, the groups of the page's only
  nonzero column are the KO-homology (`ko_e2_page` + `ko_column_collapse`).

Both guards are enforced, never assumed.  The page rows follow the period-8
coefficients KO_q(point) = Z, Z/2, Z/2, 0, Z, 0, 0, 0: integral rows repeat
the homology, the two Z/2 rows are tensor and Tor terms with Z/2.

`kunneth_times_z2` handles a direct factor of Z/2 acting trivially (ranks
double; torsion in the input would break the shortcut and is rejected).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlinalg import FinAbGroup, direct_sum, tensor_z2, tor_z2
from .groups import GroupId, all_tables_coincide


@dataclass(frozen=True)
class GradedGroup:
    """A periodic graded family of abelian groups (period 2 for K, 8 for KO).

    `extension_ambiguous` lists the degrees (mod period) where the group is
    only determined up to an abelian extension of the stated factors.
    """

    period: int
    groups: tuple[FinAbGroup, ...]
    extension_ambiguous: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.period not in (2, 8):
            raise ValueError("period must be 2 or 8")
        if len(self.groups) != self.period:
            raise ValueError(f"need exactly {self.period} groups")
        if any(not (0 <= d < self.period) for d in self.extension_ambiguous):
            raise ValueError("ambiguous degrees must lie in one period")

    def entry(self, n: int) -> FinAbGroup:
        return self.groups[n % self.period]

    def is_ambiguous(self, n: int) -> bool:
        return n % self.period in self.extension_ambiguous

    @classmethod
    def k_pair(cls, k0: FinAbGroup, k1: FinAbGroup) -> "GradedGroup":
        return cls(2, (k0, k1))


_Z = FinAbGroup.free(1)
_Z2 = FinAbGroup.of(0, [2])
_0 = FinAbGroup.zero()

#: KO_q(point) for q = 0..7, repeating with period 8.
KO_POINT = GradedGroup(8, (_Z, _Z2, _Z2, _0, _Z, _0, _0, _0))


def collapse_complex(h) -> tuple[FinAbGroup, FinAbGroup]:
    """Collapsed complex K-homology of a complex with homology `h` by degree.

    Only valid when homology vanishes in degrees >= 3; that hypothesis is
    what kills all differentials, and it is checked here.

    >>> k0, k1 = collapse_complex([FinAbGroup.free(6), FinAbGroup.zero(), FinAbGroup.free(1)])
    >>> str(k0)
    'Z^7'
    """
    h = list(h)
    for degree, g in enumerate(h):
        if degree >= 3 and not g.is_zero():
            raise ValueError(
                f"collapse needs homology to vanish in degrees >= 3; "
                f"degree {degree} is {g}"
            )
    while len(h) < 3:
        h.append(FinAbGroup.zero())
    return direct_sum(h[0], h[2]), h[1]


class E2Page:
    """A first-quadrant page with rows periodic of period 8 in q."""

    def __init__(self, max_p: int, entries: dict[tuple[int, int], FinAbGroup]):
        self.max_p = max_p
        self._entries = {k: g for k, g in entries.items() if not g.is_zero()}

    def entry(self, p: int, q: int) -> FinAbGroup:
        if p < 0 or p > self.max_p:
            return FinAbGroup.zero()
        return self._entries.get((p, q % 8), FinAbGroup.zero())

    def nonzero_positions(self) -> list[tuple[int, int]]:
        return sorted(self._entries)


def ko_e2_page(h) -> E2Page:
    """E^2 page of the KO assembly: E_{p,q} = H_p ⊗ KO_q(pt) + Tor(H_{p-1}, KO_q(pt)).

    Integral rows (q = 0, 4 mod 8) repeat the homology; the Z/2 rows
    (q = 1, 2 mod 8) are tensor plus a Tor term from one column to the left;
    the remaining rows vanish.  The hypothesis that makes this page correct
    (coinciding character tables for every stabiliser) is the caller's to
    verify -- see `ensure_ko_hypothesis`.
    """
    h = list(h)
    max_p = len(h) - 1
    entries: dict[tuple[int, int], FinAbGroup] = {}
    for p in range(max_p + 1):
        entries[(p, 0)] = h[p]
        entries[(p, 4)] = h[p]
        for q in (1, 2):
            tor_part = tor_z2(h[p - 1]) if p >= 1 else FinAbGroup.zero()
            entries[(p, q)] = direct_sum(tensor_z2(h[p]), tor_part)
    # A Tor term can stick out one column past the homology.
    if max_p >= 0 and h[max_p].torsion:
        extra = tor_z2(h[max_p])
        if not extra.is_zero():
            max_p += 1
            for q in (1, 2):
                entries[(max_p, q)] = extra
    return E2Page(max_p, entries)


def ko_column_collapse(page: E2Page) -> GradedGroup:
    """Read KO-homology off a page concentrated in the column p = 0.

    Raises when any other column is nonzero: a second column would feed
    differentials and extension problems this routine has no right to
    ignore.
    """
    bad = sorted({p for p, _ in page.nonzero_positions() if p > 0})
    if bad:
        raise ValueError(
            f"page is not concentrated in column 0 (nonzero columns {bad})"
        )
    return GradedGroup(8, tuple(page.entry(0, q) for q in range(8)))


def kunneth_times_z2(h) -> list[FinAbGroup]:
    """Homology after crossing with a trivially-acting direct factor of Z/2.

    The classifying space is unchanged but every representation ring
    doubles, so every chain group and every homology rank doubles.  The
    shortcut is only valid torsion-free and the input is checked.
    """
    out = []
    for degree, g in enumerate(h):
        if g.torsion:
            raise ValueError(
                f"rank doubling needs torsion-free homology; degree {degree} is {g}"
            )
        out.append(FinAbGroup.free(2 * g.free_rank))
    return out


def ensure_ko_hypothesis(group_ids) -> None:
    """Check that every stabiliser has coinciding character tables.

    This is the hypothesis under which the KO page of `ko_e2_page` is the
    correct one; callers must run it before trusting any KO output.
    """
    for gid in group_ids:
        if not isinstance(gid, GroupId):
            raise TypeError(f"expected GroupId, got {gid!r}")
        if not all_tables_coincide(gid):
            raise ValueError(
                f"stabiliser {gid.name()} does not have coinciding character "
                "tables; the KO page hypothesis fails"
            )


def ko_from_bredon(h) -> GradedGroup:
    """KO-homology from single-column Bredon homology (guards included)."""
    return ko_column_collapse(ko_e2_page(h))
