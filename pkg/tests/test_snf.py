"""Integer Smith normal form and homology of integer chain maps."""

import math
import random
from fractions import Fraction
from itertools import combinations

from bredon.abelian import FgAbGroup
from bredon.snf import IntMatrix, homology_at, kernel_basis, rank_of, smith_normal_form


def random_matrix(rng, nrows, ncols, lo=-9, hi=9):
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)]
    )


def exact_minor_det(rows, row_idx, col_idx):
    """Determinant of a square submatrix by fraction-free Gaussian elimination."""
    a = [[Fraction(rows[i][j]) for j in col_idx] for i in row_idx]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            factor = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= factor * a[c][j]
    return int(det)


def minor_gcd(rows, nrows, ncols, k):
    g = 0
    for ri in combinations(range(nrows), k):
        for ci in combinations(range(ncols), k):
            g = math.gcd(g, abs(exact_minor_det(rows, ri, ci)))
    return g


def test_snf_diagonal_properties():
    rng = random.Random(90125)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        a = random_matrix(rng, nrows, ncols)
        res = smith_normal_form(a)
        d = res.diagonal
        assert all(x > 0 for x in d)
        for i in range(len(d) - 1):
            assert d[i + 1] % d[i] == 0


def test_snf_matches_minor_gcd_oracle():
    # d_1 * ... * d_k equals the gcd of all k x k minors
    rng = random.Random(224)
    for _ in range(20):
        nrows, ncols = rng.randint(2, 4), rng.randint(2, 4)
        a = random_matrix(rng, nrows, ncols, -6, 6)
        res = smith_normal_form(a)
        prod = 1
        for k in range(1, min(nrows, ncols) + 1):
            g = minor_gcd(a.rows, nrows, ncols, k)
            if k <= res.rank:
                prod *= res.diagonal[k - 1]
                assert prod == g
            else:
                assert g == 0


def test_transforms_reconstruct_input():
    rng = random.Random(3331)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        a = random_matrix(rng, nrows, ncols)
        res = smith_normal_form(a, transforms=True)
        # V inverse really inverts V
        prod = res.v.mul(res.v_inv)
        assert prod == IntMatrix.identity(ncols)
        # A * V has the pivot columns first and zeros beyond the rank
        av = a.mul(res.v)
        for j in range(res.rank, ncols):
            assert all(av.rows[i][j] == 0 for i in range(nrows))


def test_kernel_basis_annihilates():
    rng = random.Random(71)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        a = random_matrix(rng, nrows, ncols)
        basis = kernel_basis(a)
        assert basis.ncols == ncols - rank_of(a)
        assert a.mul(basis).is_zero()


def test_homology_of_known_complexes():
    # 0 -> Z^2 --0--> Z^2 -> 0 at the middle spot: H = Z^2
    zero_out = IntMatrix.zero(1, 2)
    zero_in = IntMatrix.zero(2, 1)
    assert homology_at(zero_out, zero_in) == FgAbGroup.free(2)

    # multiplication by 2 on Z: cokernel Z/2
    two = IntMatrix.from_rows([[2]])
    assert homology_at(IntMatrix.zero(1, 1), two) == FgAbGroup.from_factors(0, [2])

    # diag(2, 3) into Z^2: quotient Z/2 + Z/3, normalized to Z/6
    diag = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert homology_at(IntMatrix.zero(1, 2), diag) == FgAbGroup.from_factors(0, [6])

    # [[1, 1], [1, -1]] has determinant -2: cokernel Z/2
    hadamard = IntMatrix.from_rows([[1, 1], [1, -1]])
    assert homology_at(IntMatrix.zero(1, 2), hadamard) == FgAbGroup.from_factors(0, [2])


def test_homology_chain_rule():
    # two-step complex Z^3 --A--> Z^3 --B--> Z^3 with B*A = 0
    b = IntMatrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 0]])
    # kernel of B is spanned by e3; pick A mapping onto multiples of e3
    a = IntMatrix.from_rows([[0, 0, 0], [0, 0, 0], [3, 0, 0]])
    assert b.mul(a).is_zero()
    h = homology_at(b, a)
    assert h == FgAbGroup.from_factors(0, [3])


def test_snf_empty_and_zero():
    z = IntMatrix.zero(3, 3)
    res = smith_normal_form(z)
    assert res.rank == 0 and res.diagonal == []
    assert kernel_basis(z).ncols == 3
