"""Exact integer matrices, Smith normal form, and homology of a pair of maps.

Everything here runs on arbitrary-precision Python ints; numpy never
touches these matrices because intermediate entries can outgrow fixed
width.  The Smith reduction tracks the right transform V and its inverse
so kernels can be expressed in the original basis, which is what the
homology computation needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import FgAbGroup
from .errors import ConsistencyError, ContractError


@dataclass
class IntMatrix:
    """Dense integer matrix with explicit shape (rows may be empty)."""

    nrows: int
    ncols: int
    rows: list[list[int]]

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls(n, n, rows)

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ContractError("ragged rows")
        return cls(len(rows), ncols, rows)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, [row[:] for row in self.rows])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ContractError(
                f"shape mismatch {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}"
            )
        # sparse-aware: skip zero coefficients, they dominate chain matrices
        out = [[0] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.rows[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
        return IntMatrix(self.nrows, other.ncols, out)


@dataclass
class SmithResult:
    """Diagonal invariant factors d_1 | d_2 | ... (positive, length = rank),
    plus optional transforms: s = U a V with V invertible over Z."""

    diagonal: list[int]
    rank: int
    v: IntMatrix | None = None
    v_inv: IntMatrix | None = None


def smith_normal_form(a: IntMatrix, transforms: bool = False) -> SmithResult:
    """Smith normal form by repeated pivoting on a least-magnitude entry.

    Pivot choice: among nonzero entries of the remaining submatrix, pick
    minimal |value|, breaking ties by smallest row then column.  Row and
    column operations clear the pivot cross; a divisibility sweep then
    guarantees d_i | d_{i+1}.  Only column operations touch V and V^-1.
    """
    m = [row[:] for row in a.rows]
    nr, nc = a.nrows, a.ncols
    if transforms:
        v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
        vinv = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    else:
        v = vinv = None

    def swap_cols(i, j):
        if i == j:
            return
        for row in m:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

    def negate_col(i):
        for row in m:
            row[i] = -row[i]
        if v is not None:
            for row in v:
                row[i] = -row[i]
            vinv[i] = [-x for x in vinv[i]]

    def add_col(dst, src, q):
        # column dst += q * column src;  V tracks it, V^-1 absorbs the inverse
        if q == 0:
            return
        for row in m:
            if row[src]:
                row[dst] += q * row[src]
        if v is not None:
            for row in v:
                if row[src]:
                    row[dst] += q * row[src]
            vsrc, vdst = vinv[src], vinv[dst]
            vinv[src] = [x - q * y for x, y in zip(vsrc, vdst)]

    def find_pivot(s):
        best = None
        for i in range(s, nr):
            row = m[i]
            for j in range(s, nc):
                val = row[j]
                if val:
                    mag = -val if val < 0 else val
                    if best is None or mag < best[0]:
                        best = (mag, i, j)
                        if mag == 1:
                            return best
        return best

    s = 0
    limit = min(nr, nc)
    while s < limit:
        best = find_pivot(s)
        if best is None:
            break
        _, pi, pj = best
        m[s], m[pi] = m[pi], m[s]
        swap_cols(s, pj)
        while True:
            # clear column s below the pivot
            dirty = False
            for i in range(s + 1, nr):
                if m[i][s]:
                    q = m[i][s] // m[s][s]
                    if q:
                        ms = m[s]
                        m[i] = [x - q * y for x, y in zip(m[i], ms)]
                    if m[i][s]:
                        # remainder smaller than pivot: promote it
                        m[s], m[i] = m[i], m[s]
                        dirty = True
            if dirty:
                continue
            # clear row s right of the pivot
            for j in range(s + 1, nc):
                if m[s][j]:
                    q = m[s][j] // m[s][s]
                    add_col(j, s, -q)
                    if m[s][j]:
                        swap_cols(s, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            pv = m[s][s]
            for i in range(s + 1, nr):
                row = m[i]
                for j in range(s + 1, nc):
                    if row[j] % pv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            ms = m[s]
            m[s] = [x + y for x, y in zip(ms, m[offender])]
        if m[s][s] < 0:
            negate_col(s)
        s += 1

    diagonal = [m[i][i] for i in range(s)]
    for d, e in zip(diagonal, diagonal[1:]):
        if e % d:
            raise ConsistencyError("invariant factors failed the divisor chain")
    return SmithResult(
        diagonal=diagonal,
        rank=s,
        v=IntMatrix(nc, nc, v) if transforms else None,
        v_inv=IntMatrix(nc, nc, vinv) if transforms else None,
    )


def rank_of(a: IntMatrix) -> int:
    return smith_normal_form(a).rank


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a basis of ker(a) over Z (a acts on column vectors)."""
    res = smith_normal_form(a, transforms=True)
    n, r = a.ncols, res.rank
    rows = [[res.v.rows[i][j] for j in range(r, n)] for i in range(n)]
    return IntMatrix(n, n - r, rows)


def homology_at(d_out: IntMatrix, d_in: IntMatrix) -> FgAbGroup:
    """ker(d_out) / im(d_in) for integer maps with d_out . d_in = 0.

    d_out maps the middle term down, d_in maps into it; both act on
    column vectors.  Writing S = U d_out V, the kernel is spanned by the
    columns of V past rank(d_out); d_in is rewritten in that basis via
    V^-1 and a second Smith reduction reads off the quotient.
    """
    n = d_out.ncols
    if d_in.nrows != n:
        raise ContractError("chain degrees do not line up")
    if n == 0:
        return FgAbGroup()
    res = smith_normal_form(d_out, transforms=True)
    r = res.rank
    coords = res.v_inv.mul(d_in)
    for i in range(r):
        if any(coords.rows[i]):
            raise ConsistencyError("composite of differentials is nonzero")
    quot = IntMatrix(n - r, d_in.ncols, coords.rows[r:])
    inner = smith_normal_form(quot)
    torsion = [d for d in inner.diagonal if d > 1]
    return FgAbGroup.from_factors(n - r - inner.rank, torsion)
