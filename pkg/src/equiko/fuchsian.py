"""Cocompact and finite-covolume Fuchsian signatures and their closed forms.

A signature [g, s; m_1, ..., m_r] records genus, number of cusps, and cone
orders.  For these groups the Bredon homology of the classifying space for
proper actions is concentrated in degrees <= 2 and torsion-free, with ranks
given by closed formulas; the equivariant K-homology then collapses to

    K_0 = H_0 + H_2,    K_1 = H_1.

The closed forms here are the fast path; the chain-level computation via
`bredon.fuchsian_*_datum` + `bredon.bredon_homology` is the cross-check used
throughout the test suite and the `verify` command.

Congruence subgroups Gamma_0(p) of the modular group act on a tree with
quotient structure depending only on p mod 12, so their signatures (and the
signature of the modular group itself, [0, 1; 2, 3]) appear as specific
instances.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exactlinalg import FinAbGroup


@dataclass(frozen=True)
class Signature:
    """A signature [g, s; m_1, ..., m_r]; equality treats periods as a multiset.

    >>> Signature(0, 0, (3, 2)) == parse_signature("[0,0;2,3]")
    True
    """

    g: int
    s: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if self.g < 0 or self.s < 0:
            raise ValueError("genus and cusp count must be nonnegative")
        if any(m < 2 for m in self.periods):
            raise ValueError("periods must be >= 2")
        object.__setattr__(self, "periods", tuple(self.periods))

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.g, self.s, sorted(self.periods)) == (
            other.g,
            other.s,
            sorted(other.periods),
        )

    def __hash__(self):
        return hash((self.g, self.s, tuple(sorted(self.periods))))

    def is_cocompact(self) -> bool:
        return self.s == 0

    def __str__(self) -> str:
        return f"[{self.g},{self.s};{','.join(str(m) for m in self.periods)}]"

    __repr__ = __str__


_SIGNATURE_RE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*;\s*([\d\s,]*)\]$")


def parse_signature(text: str) -> Signature:
    """Parse "[g,s;m1,m2,...]" (empty period list: "[g,s;]").

    >>> parse_signature("[1, 2; 2, 2, 3]")
    [1,2;2,2,3]
    """
    m = _SIGNATURE_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed signature {text!r}; expected [g,s;m1,m2,...]")
    g, s = int(m.group(1)), int(m.group(2))
    body = m.group(3).strip()
    periods: tuple[int, ...] = ()
    if body:
        parts = [p.strip() for p in body.split(",")]
        if any(not p for p in parts):
            raise ValueError(f"malformed period list in {text!r}")
        periods = tuple(int(p) for p in parts)
    return Signature(g, s, periods)


# ---------------------------------------------------------------------------
# Closed forms


def bredon_closed_form(sig: Signature) -> list[FinAbGroup]:
    """Bredon homology (with representation-ring coefficients), closed form.

    Degree 0 has rank 1 + sum of (m_j - 1); degree 1 has rank 2g in the
    cocompact case and 2g + s - 1 otherwise; degree 2 is Z exactly when the
    group is cocompact.  Everything is torsion-free.
    """
    h0 = FinAbGroup.free(1 + sum(m - 1 for m in sig.periods))
    if sig.is_cocompact():
        return [h0, FinAbGroup.free(2 * sig.g), FinAbGroup.free(1)]
    return [h0, FinAbGroup.free(2 * sig.g + sig.s - 1)]


def equivariant_k(sig: Signature) -> tuple[FinAbGroup, FinAbGroup]:
    """Equivariant K-homology of the classifying space for proper actions.

    Collapse of the Bredon closed form: K_0 collects degrees 0 and 2, K_1 is
    degree 1.

    >>> tuple(str(g) for g in equivariant_k(parse_signature("[1,0;]")))
    ('Z^2', 'Z^2')
    """
    h = bredon_closed_form(sig)
    k0_rank = h[0].free_rank + (h[2].free_rank if len(h) > 2 else 0)
    return FinAbGroup.free(k0_rank), FinAbGroup.free(h[1].free_rank)


# ---------------------------------------------------------------------------
# Congruence subgroups of the modular group

#: Signature of the modular group PSL_2(Z) itself.
MODULAR_SIGNATURE = Signature(0, 1, (2, 3))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def hecke_signature(p: int) -> Signature:
    """Signature of Gamma_0(p) as a Fuchsian group, for p prime.

    The quotient of the tree by Gamma_0(p) has genus 0; the cusp count and
    the surviving torsion depend only on p mod 12:

    * p = 2: [0, 2; 2]            * p = 3: [0, 2; 3]
    * p = 1 mod 12: [0, (p-7)/6 + 1; 2, 2, 3, 3]
    * p = 5 mod 12: [0, (p+1)/6 + 1; 2, 2]
    * p = 7 mod 12: [0, (p-1)/6 + 1; 3, 3]
    * p = 11 mod 12: [0, (p+7)/6 + 1;]  (torsion-free)

    >>> str(hecke_signature(13))
    '[0,2;2,2,3,3]'
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return Signature(0, 2, (2,))
    if p == 3:
        return Signature(0, 2, (3,))
    residue = p % 12
    if residue == 1:
        return Signature(0, (p - 7) // 6 + 1, (2, 2, 3, 3))
    if residue == 5:
        return Signature(0, (p + 1) // 6 + 1, (2, 2))
    if residue == 7:
        return Signature(0, (p - 1) // 6 + 1, (3, 3))
    return Signature(0, (p + 7) // 6 + 1, ())


def hecke_bredon(p: int) -> tuple[FinAbGroup, FinAbGroup]:
    """Bredon homology of Gamma_0(p) in degrees 0 and 1 (closed form).

    >>> tuple(str(g) for g in hecke_bredon(11))
    ('Z', 'Z^3')
    """
    h = bredon_closed_form(hecke_signature(p))
    return h[0], h[1]


def hecke_loop_rank(p: int) -> int:
    """Rank of degree-1 Bredon homology of Gamma_0(p): the loop count 2g+s-1."""
    sig = hecke_signature(p)
    return 2 * sig.g + sig.s - 1
