"""Cell structure of the quotient complex and its boundary maps."""

import pytest

from bredon.abelian import FgAbGroup, HomologyProfile
from bredon.chains import (
    assemble_complex,
    build_cells,
    cell_pair_homology,
    chain_homology,
    relative_complex,
)
from bredon.characters import RepRingCache
from bredon.coxeter import enumerate_spherical, parse_matrix


@pytest.fixture(scope="module")
def rings():
    return RepRingCache()


def complex_for(rows, rings):
    w = parse_matrix(rows)
    return w, assemble_complex(w, rings)


def test_cell_counts_infinite_dihedral(rings):
    w, cx = complex_for([[1, 0], [0, 1]], rings)
    # chains in the poset {emptyset, {1}, {2}}: three length-1, two length-2
    assert [len(level) for level in cx.cells] == [3, 2]
    assert cx.dims == [5, 2]


def test_cell_counts_grow_with_chain_length(rings):
    w, cx = complex_for([[1, 3, 2], [3, 1, 3], [2, 3, 1]], rings)
    # Sym(4): poset has 1 + 3 + 3 + 1 = 8 subsets; chains of length k+1
    # strictly increasing; top dimension is 3
    assert cx.top_dimension == 3
    poset = enumerate_spherical(w)
    assert poset.size == 8


def test_boundary_squares_to_zero(rings):
    cases = [
        [[1, 0], [0, 1]],
        [[1, 3, 3], [3, 1, 3], [3, 3, 1]],
        [[1, 2, 4], [2, 1, 4], [4, 4, 1]],
        [[1, 4, 2], [4, 1, 3], [2, 3, 1]],
        [[1, 3, 0], [3, 1, 4], [0, 4, 1]],
    ]
    for rows in cases:
        _, cx = complex_for(rows, rings)
        for k in range(1, cx.top_dimension + 1):
            prod = cx.boundary(k).mul(cx.boundary(k + 1))
            assert prod.is_zero()


def test_boundary_out_of_range_is_zero(rings):
    _, cx = complex_for([[1, 0], [0, 1]], rings)
    top = cx.top_dimension
    assert cx.boundary(top + 1).is_zero()
    assert cx.boundary(0).nrows == 0


def test_infinite_dihedral_worked_boundary(rings):
    # columns of d_1: cell ({} < {i}) maps to -[induced] + [regular at {}]
    w, cx = complex_for([[1, 0], [0, 1]], rings)
    d1 = cx.boundary(1)
    assert d1.nrows == 5 and d1.ncols == 2
    # coordinate order: [{}], [{1}] x2, [{2}] x2
    # inducing the trivial character of {e} to A1 gives both characters once
    assert [row[0] for row in d1.rows] == [1, -1, -1, 0, 0]
    assert [row[1] for row in d1.rows] == [1, 0, 0, -1, -1]


def test_infinite_dihedral_homology(rings):
    _, cx = complex_for([[1, 0], [0, 1]], rings)
    prof = cx.homology()
    assert prof.group_at(0) == FgAbGroup.free(3)
    assert prof.max_degree == 0


def test_known_triangle_groups(rings):
    _, cx = complex_for([[1, 3, 3], [3, 1, 3], [3, 3, 1]], rings)
    prof = cx.homology()
    assert prof.group_at(0) == FgAbGroup.free(5)
    assert prof.group_at(1) == FgAbGroup.free(1)

    _, cx = complex_for([[1, 2, 4], [2, 1, 4], [4, 4, 1]], rings)
    assert cx.homology().group_at(0) == FgAbGroup.free(9)

    _, cx = complex_for([[1, 0, 0], [0, 1, 0], [0, 0, 1]], rings)
    assert cx.homology().group_at(0) == FgAbGroup.free(4)


def test_finite_group_concentrated_in_degree_zero(rings):
    # for finite W the complex is a cone: reduced homology vanishes above 0
    for rows in (
        [[1, 3], [3, 1]],
        [[1, 4, 2], [4, 1, 3], [2, 3, 1]],
        [[1, 3, 2], [3, 1, 3], [2, 3, 1]],
    ):
        w, cx = complex_for(rows, rings)
        prof = cx.homology()
        assert prof.max_degree == 0
        n_classes = rings.table(w, w.generators).n_classes
        assert prof.group_at(0) == FgAbGroup.free(n_classes)


def test_max_degree_truncation(rings):
    w = parse_matrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    prof = chain_homology(w, rings, max_degree=0)
    assert prof.group_at(0) == FgAbGroup.free(5)
    assert prof.max_degree == 0


def test_build_cells_top_rank_filter(rings):
    w = parse_matrix([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    poset = enumerate_spherical(w)
    full = build_cells(poset, max_top_rank=w.rank)
    only_rank1 = build_cells(poset, max_top_rank=1)
    assert all(
        len(chain[-1]) <= 1 for level in only_rank1 for chain in level
    )
    assert sum(map(len, only_rank1)) < sum(map(len, full))


def test_relative_complex_skeleton_decomposition(rings):
    # the n-th relative skeleton complex splits over rank-n spherical
    # subsets into the per-subset relative complexes
    w = parse_matrix([[1, 2, 4], [2, 1, 4], [4, 4, 1]])
    full = assemble_complex(w, rings)
    poset = enumerate_spherical(w)
    for n in range(1, w.rank + 1):
        rel = relative_complex(full, n)
        got = rel.homology()
        combined: dict[int, FgAbGroup] = {}
        for t in poset.by_rank[n] if n < len(poset.by_rank) else []:
            part = cell_pair_homology(w, t, rings)
            for d, g in part.groups.items():
                combined[d] = combined.get(d, FgAbGroup.free(0)).direct_sum(g)
        assert got == HomologyProfile(combined)


def test_cell_pair_even_dihedral(rings):
    # label m even: the pair contributes Z^(m/2) in degree 0 only
    w = parse_matrix([[1, 4], [4, 1]])
    prof = cell_pair_homology(w, (0, 1), rings)
    assert prof.group_at(0) == FgAbGroup.free(2)
    assert prof.max_degree == 0


def test_cell_pair_odd_dihedral(rings):
    # label m odd: Z^((m-1)/2) in degree 0 and Z in degree 1
    w = parse_matrix([[1, 3], [3, 1]])
    prof = cell_pair_homology(w, (0, 1), rings)
    assert prof.group_at(0) == FgAbGroup.free(1)
    assert prof.group_at(1) == FgAbGroup.free(1)
