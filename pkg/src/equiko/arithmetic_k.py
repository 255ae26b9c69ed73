"""K-homology for PSL_2(Z[1/p]), SL_2(Z[1/p]) and associated C*-algebras.

PSL_2(Z[1/p]) is the amalgam of two copies of the modular group over
Gamma_0(p); a Mayer-Vietoris argument turns the closed-form Bredon homology
of the pieces into the Bredon homology of the amalgam:

* H_2 is the degree-1 homology of Gamma_0(p),
* H_0 is free on the conjugacy classes of finite-order elements,
* the rank of H_1 is forced by exactness of
  0 -> H_1(Gamma) -> H_0(Gamma_0(p)) -> Z^8 -> H_0(Gamma) -> 0,
  the Z^8 collecting degree-0 homology of the two modular-group vertices.

Every group in this calculus is torsion-free and the code raises if torsion
ever shows up.  SL_2(Z[1/p]) doubles everything through the central Z/2
extension.  For p = 11 mod 12 the group acts on a tree with torsion-free
cusp data, the quotient classifying space is homotopy equivalent to a wedge
of (p+7)/6 two-spheres plus cones on the four finite subgroup classes, and
the K- and KO-groups of the reduced group C*-algebras assemble summand by
summand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlinalg import FinAbGroup, direct_sum
from .fuchsian import hecke_bredon, hecke_loop_rank, hecke_signature, is_prime
from .ko_assembly import KO_POINT, GradedGroup, collapse_complex


@dataclass(frozen=True)
class ClassCount:
    """Conjugacy classes of finite-order elements in PSL_2(Z[1/p])."""

    identity: int
    order2: int
    order3: int

    @property
    def total(self) -> int:
        return self.identity + self.order2 + self.order3


@dataclass(frozen=True)
class MaximalSubgroupList:
    """Conjugacy classes of maximal finite subgroups (all Z/2 or Z/3 here)."""

    z2_classes: int
    z3_classes: int


def class_count_psl(p: int) -> ClassCount:
    """Count finite-order classes from the Gamma_0(p) signature.

    Amalgamating over Gamma_0(p) fuses classes of the two modular-group
    factors exactly when the corresponding torsion survives in Gamma_0(p):
    a period 2 fuses the two order-2 classes into one, its absence leaves
    two; periods 3 fuse the four order-3 classes (two per factor) into two,
    their absence leaves four.

    >>> class_count_psl(23)
    ClassCount(identity=1, order2=2, order3=4)
    """
    sig = hecke_signature(p)
    order2 = 1 if 2 in sig.periods else 2
    order3 = 2 if 3 in sig.periods else 4
    return ClassCount(1, order2, order3)


def maximal_subgroups(p: int) -> MaximalSubgroupList:
    """Maximal finite subgroup classes: one Z/2 per involution class, one
    Z/3 per inverse-pair of order-3 classes."""
    counts = class_count_psl(p)
    if counts.order3 % 2 != 0:
        raise ValueError("order-3 classes must come in inverse pairs")
    return MaximalSubgroupList(counts.order2, counts.order3 // 2)


def _require_free(g: FinAbGroup, what: str) -> FinAbGroup:
    if g.torsion:
        raise ValueError(f"{what} acquired torsion ({g}); the amalgam calculus forbids it")
    return g


def psl_zp_bredon(p: int) -> list[FinAbGroup]:
    """Bredon homology of PSL_2(Z[1/p]) in degrees 0..2, via Mayer-Vietoris.

    >>> [str(g) for g in psl_zp_bredon(13)]
    ['Z^4', 'Z^3', 'Z']
    """
    h0_edge, h1_edge = hecke_bredon(p)
    _require_free(h0_edge, "H_0 of Gamma_0(p)")
    _require_free(h1_edge, "H_1 of Gamma_0(p)")
    total = class_count_psl(p).total
    # Exactness: 0 -> H_1 -> H_0(edge) -> Z^4 + Z^4 -> H_0 -> 0.
    h1_rank = h0_edge.free_rank - 8 + total
    if h1_rank < 0:
        raise ValueError(
            f"forced H_1 rank is negative for p={p}; inputs are inconsistent"
        )
    return [
        FinAbGroup.free(total),
        FinAbGroup.free(h1_rank),
        FinAbGroup.free(h1_edge.free_rank),
    ]


def psl_zp_k(p: int) -> tuple[FinAbGroup, FinAbGroup]:
    """Equivariant K-homology of PSL_2(Z[1/p]) (collapsed assembly).

    >>> tuple(str(g) for g in psl_zp_k(17))
    ('Z^9', 'Z')
    """
    return collapse_complex(psl_zp_bredon(p))


def sl_zp_k(p: int) -> tuple[FinAbGroup, FinAbGroup]:
    """Equivariant K-homology of SL_2(Z[1/p]): the central Z/2 doubles ranks.

    >>> tuple(str(g) for g in sl_zp_k(13))
    ('Z^10', 'Z^6')
    """
    k0, k1 = psl_zp_k(p)
    return (
        _require_free(direct_sum(k0, k0), "doubled K_0"),
        _require_free(direct_sum(k1, k1), "doubled K_1"),
    )


def _require_11_mod_12(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 12 != 11:
        raise ValueError(
            f"the C*-algebra decomposition needs p = 11 mod 12, got p = {p}"
        )
    return hecke_loop_rank(p)  # the wedge has this many 2-spheres


def cstar_k_p11(p: int) -> tuple[FinAbGroup, FinAbGroup]:
    """K-theory of the reduced C*-algebra of PSL_2(Z[1/p]), p = 11 mod 12.

    Summands: reduced K of C*_r(Z/2) (rank 1) per involution class, reduced
    K of C*_r(Z/3) (rank 2) per Z/3 class, and K of a wedge of b 2-spheres
    (rank 1 + b), with b = (p+7)/6; odd K vanishes throughout.

    >>> str(cstar_k_p11(11)[0])
    'Z^10'
    """
    b = _require_11_mod_12(p)
    subs = maximal_subgroups(p)
    rank = subs.z2_classes * 1 + subs.z3_classes * 2 + 1 + b
    return FinAbGroup.free(rank), FinAbGroup.zero()


def cstar_ko_p11(p: int) -> GradedGroup:
    """KO-theory of the reduced real C*-algebra, p = 11 mod 12.

    Degreewise sum of: one KO(point) per Z/2 class, one complex-periodicity
    block (Z, 0, Z, 0, ...) per Z/3 class (the reduced real group algebra of
    Z/3 is a complex field), and KO_n(pt) + KO_{n-2}(pt)^b for the wedge of
    b 2-spheres.  In degrees 1, 3 and 4 mod 8 the result is only determined
    up to extension of the listed factors, and is flagged as such.
    """
    b = _require_11_mod_12(p)
    subs = maximal_subgroups(p)
    groups = []
    for n in range(8):
        parts = []
        for _ in range(subs.z2_classes):
            parts.append(KO_POINT.entry(n))
        for _ in range(subs.z3_classes):
            parts.append(FinAbGroup.free(1) if n % 2 == 0 else FinAbGroup.zero())
        parts.append(KO_POINT.entry(n))
        sphere_cell = KO_POINT.entry(n - 2)
        parts.extend([sphere_cell] * b)
        groups.append(direct_sum(*parts))
    return GradedGroup(8, tuple(groups), frozenset({1, 3, 4}))
