"""Exact linear algebra over the integers.

Everything downstream (Bredon chain complexes, K- and KO-group assembly)
reduces to three primitives implemented here:

* immutable integer matrices with exact arithmetic,
* Smith normal form with recorded unimodular transforms,
* finitely generated abelian groups in invariant-factor canonical form.

All arithmetic uses Python's arbitrary-precision integers; there is no
fixed-width fast path anywhere, so intermediate blow-up in the transform
matrices is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass


class ChainComplexError(ValueError):
    """Raised when chain-complex data is malformed (shapes or d∘d != 0)."""


def _check_int(x) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise ValueError(f"expected a Python int, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rows x cols integer matrix, stored row-major.

    Zero rows or columns are allowed; empty matrices behave as the unique
    linear map between the corresponding free groups.

    >>> a = IntMatrix.from_rows([[1, 2], [3, 4]])
    >>> b = IntMatrix.identity(2)
    >>> a @ b == a
    True
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            _check_int(e)

    @classmethod
    def from_rows(cls, data, cols: int | None = None) -> "IntMatrix":
        """Build from a list of row lists; `cols` disambiguates empty shapes."""
        data = [list(row) for row in data]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
        else:
            width = 0
        if cols is not None:
            if data and width != cols:
                raise ValueError(f"rows have width {width}, expected {cols}")
            width = cols
        flat = tuple(_check_int(x) for row in data for x in row)
        return cls(len(data), width, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag, rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        """rows x cols matrix with `diag` on the main diagonal, zero elsewhere.

        Shape defaults to square of size len(diag).
        """
        diag = list(diag)
        if rows is None:
            rows = len(diag)
        if cols is None:
            cols = len(diag)
        if len(diag) > min(rows, cols):
            raise ValueError("diagonal longer than matrix")
        entries = [0] * (rows * cols)
        for k, d in enumerate(diag):
            entries[k * cols + k] = _check_int(d)
        return cls(rows, cols, tuple(entries))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            base = i * k
            for t in range(k):
                ait = a[base + t]
                if ait:
                    brow = t * m
                    orow = i * m
                    for j in range(m):
                        out[orow + j] += ait * b[brow + j]
        return IntMatrix(n, m, tuple(out))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(
            self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries))
        )

    def scaled(self, c: int) -> "IntMatrix":
        _check_int(c)
        return IntMatrix(self.rows, self.cols, tuple(c * e for e in self.entries))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.row_list()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # Bareiss update: division by the previous pivot is exact.
                    a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = pivot
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        return "\n".join(" ".join(str(x) for x in row) for row in self.row_list())


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form data: left @ m @ right == diagonal(d), padded with zeros.

    `left` and `right` are unimodular (determinant ±1); `d` is the tuple of
    positive invariant factors, each dividing the next.
    """

    d: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def __post_init__(self):
        for i, x in enumerate(self.d):
            if x <= 0:
                raise ValueError("invariant factors must be positive")
            if i and self.d[i - 1] != 0 and x % self.d[i - 1] != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def rank(self) -> int:
        return len(self.d)

    def diagonal_matrix(self, rows: int | None = None, cols: int | None = None) -> IntMatrix:
        """The diagonal form itself; shape defaults to that of the input."""
        if rows is None:
            rows = self.left.rows
        if cols is None:
            cols = self.right.rows
        return IntMatrix.diagonal(self.d, rows, cols)


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen by minimal absolute value over the untouched block,
    which keeps intermediate entries small in practice.  Row operations are
    mirrored into `left`, column operations into `right`, so the identity
    left @ m @ right == diag(d) holds exactly.

    >>> res = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> res.d
    (2, 4)
    """
    nrows, ncols = m.rows, m.cols
    a = m.row_list()
    left = IntMatrix.identity(nrows).row_list()
    right = IntMatrix.identity(ncols).row_list()

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        adst, asrc = a[dst], a[src]
        for j in range(ncols):
            adst[j] += c * asrc[j]
        ldst, lsrc = left[dst], left[src]
        for j in range(nrows):
            ldst[j] += c * lsrc[j]

    def add_col(dst, src, c):
        # col_dst += c * col_src
        for row in a:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    bound = min(nrows, ncols)
    while t < bound:
        # Locate a pivot of minimal absolute value in the untouched block.
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if a[t][t] < 0:
            negate_row(t)
        p = a[t][t]

        dirty = False
        for i in range(t + 1, nrows):
            if a[i][t]:
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if a[t][j]:
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            # Some remainder is now strictly smaller than the pivot; re-pick.
            continue

        # Row and column t are clear.  Enforce divisibility of the rest of
        # the block by the pivot before moving on.
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    d = tuple(a[k][k] for k in range(bound) if a[k][k] != 0)
    return SNFResult(
        d=d,
        left=IntMatrix.from_rows(left, cols=nrows),
        right=IntMatrix.from_rows(right, cols=ncols),
    )


def matrix_rank(m: IntMatrix) -> int:
    return smith_normal_form(m).rank


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (orders here are small)."""
    if n <= 0:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors(orders) -> tuple[int, ...]:
    """Normalize a list of cyclic orders into an invariant-factor chain.

    Splits each order into prime powers, then reassembles so that each
    factor divides the next (largest factor collects the largest prime
    powers).

    >>> _invariant_factors([2, 3])
    (6,)
    >>> _invariant_factors([2, 4, 3])
    (2, 12)
    """
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        _check_int(n)
        if n < 1:
            raise ValueError(f"cyclic order must be >= 1, got {n}")
        for p, e in _factorize(n).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    depth = max(len(v) for v in by_prime.values())
    for v in by_prime.values():
        v.sort(reverse=True)
        v.extend([0] * (depth - len(v)))
    factors = []
    for k in range(depth):
        f = 1
        for p, v in by_prime.items():
            f *= p ** v[k]
        if f > 1:
            factors.append(f)
    factors.reverse()  # ascending divisibility chain
    return tuple(factors)


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group in canonical form.

    `free_rank` copies of Z plus cyclic factors Z/d with each torsion order
    dividing the next (invariant factors).  Construct with `of` to normalize
    arbitrary cyclic decompositions.

    >>> str(FinAbGroup.of(1, [2, 3]))
    'Z + Z/6'
    >>> FinAbGroup.of(0, [2, 4]) == FinAbGroup.of(0, [8])
    False
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        _check_int(self.free_rank)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for i, d in enumerate(self.torsion):
            _check_int(d)
            if d < 2:
                raise ValueError("torsion orders must be >= 2")
            if i and d % self.torsion[i - 1] != 0:
                raise ValueError("torsion orders must form a divisibility chain")

    @classmethod
    def zero(cls) -> "FinAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FinAbGroup":
        return cls(rank, ())

    @classmethod
    def of(cls, free_rank: int, cyclic_orders=()) -> "FinAbGroup":
        """Normalize: drop order-1 factors, restore the divisibility chain."""
        return cls(free_rank, _invariant_factors(cyclic_orders))

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append(f"Z^{self.free_rank}")
        terms.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__


def direct_sum(*groups: FinAbGroup) -> FinAbGroup:
    """Direct sum, renormalized to canonical form.

    >>> str(direct_sum(FinAbGroup.free(6), FinAbGroup.free(1)))
    'Z^7'
    """
    rank = sum(g.free_rank for g in groups)
    orders = [d for g in groups for d in g.torsion]
    return FinAbGroup.of(rank, orders)


def tensor_z2(g: FinAbGroup) -> FinAbGroup:
    """g ⊗ Z/2: one Z/2 per free generator and per even torsion factor.

    >>> str(tensor_z2(FinAbGroup.of(1, [3])))
    'Z/2'
    """
    count = g.free_rank + sum(1 for d in g.torsion if d % 2 == 0)
    return FinAbGroup.of(0, [2] * count)


def tor_z2(g: FinAbGroup) -> FinAbGroup:
    """Tor(g, Z/2): one Z/2 per even torsion factor; free parts contribute nothing."""
    count = sum(1 for d in g.torsion if d % 2 == 0)
    return FinAbGroup.of(0, [2] * count)


@dataclass(frozen=True)
class IntChainComplex:
    """A bounded chain complex of finitely generated free abelian groups.

    `ranks[i]` is the rank of the chain group in degree `bottom_degree + i`;
    `boundaries[i]` is the matrix of the differential from degree
    `bottom_degree + i + 1` down to `bottom_degree + i` (columns index the
    higher degree).  The composite of consecutive differentials must vanish;
    this is checked on construction.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]
    bottom_degree: int = 0

    def __post_init__(self):
        if not self.ranks:
            raise ChainComplexError("a chain complex needs at least one degree")
        if any(r < 0 for r in self.ranks):
            raise ChainComplexError("chain group ranks must be nonnegative")
        if len(self.boundaries) != len(self.ranks) - 1:
            raise ChainComplexError(
                f"expected {len(self.ranks) - 1} boundary maps, got {len(self.boundaries)}"
            )
        for i, b in enumerate(self.boundaries):
            if (b.rows, b.cols) != (self.ranks[i], self.ranks[i + 1]):
                raise ChainComplexError(
                    f"boundary into degree {self.bottom_degree + i} has shape "
                    f"{b.rows}x{b.cols}, expected {self.ranks[i]}x{self.ranks[i + 1]}"
                )
        for i in range(len(self.boundaries) - 1):
            if not (self.boundaries[i] @ self.boundaries[i + 1]).is_zero():
                raise ChainComplexError(
                    f"composite of differentials through degree "
                    f"{self.bottom_degree + i + 1} is nonzero"
                )

    @classmethod
    def from_data(cls, bottom_degree, ranks, boundaries) -> "IntChainComplex":
        return cls(tuple(ranks), tuple(boundaries), bottom_degree)

    @property
    def top_degree(self) -> int:
        return self.bottom_degree + len(self.ranks) - 1

    def rank_in_degree(self, n: int) -> int:
        i = n - self.bottom_degree
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def euler_characteristic(self) -> int:
        return sum(
            (-1) ** (self.bottom_degree + i) * r for i, r in enumerate(self.ranks)
        )


def homology(c: IntChainComplex, n: int) -> FinAbGroup:
    """H_n(c) = ker(d out of degree n) / im(d into degree n).

    The image of the incoming differential sits inside the kernel of the
    outgoing one (saturated, since chain groups are free), so the torsion of
    H_n is exactly the set of invariant factors > 1 of the incoming matrix,
    and the free rank is rank C_n minus the two matrix ranks.
    """
    i = n - c.bottom_degree
    if i < 0 or i >= len(c.ranks):
        return FinAbGroup.zero()
    out_rank = matrix_rank(c.boundaries[i - 1]) if i >= 1 else 0
    if i < len(c.boundaries):
        snf_in = smith_normal_form(c.boundaries[i])
        in_rank = snf_in.rank
        torsion = [d for d in snf_in.d if d > 1]
    else:
        in_rank = 0
        torsion = []
    return FinAbGroup.of(c.ranks[i] - out_rank - in_rank, torsion)


def all_homology(c: IntChainComplex) -> list[FinAbGroup]:
    """Homology in every degree of the complex, bottom degree first."""
    return [homology(c, c.bottom_degree + i) for i in range(len(c.ranks))]
