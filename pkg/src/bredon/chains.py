"""The Bredon chain complex of the Davis complex, modulo the group action.

The quotient of the Davis complex by W has one cell per strictly
increasing chain T_1 < T_2 < ... < T_n of nonempty-or-empty spherical
subsets (the empty set is allowed and sits at the bottom); that cell has
dimension n - 1 and stabilizer conjugate to W_{T_1}.  The Bredon chain
group in degree d is the direct sum of R_C(W_{T_1}) over the degree-d
cells, and the boundary deletes one chain entry at a time:

    d(T_1 < ... < T_n) = sum_{k=1}^{n} (-1)^k (T_1 < ... T_k^ ... < T_n)

where deleting k = 1 changes the stabilizer and contributes minus the
induction R(W_{T_1}) -> R(W_{T_2}), and every other deletion contributes
(+-1) times the identity of R(W_{T_1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import HomologyProfile
from .characters import RepRingCache
from .coxeter import CoxeterMatrix, SphericalPoset, enumerate_spherical
from .errors import ContractError
from .snf import IntMatrix, homology_at

Chain = tuple[tuple[int, ...], ...]


def build_cells(
    poset: SphericalPoset, max_top_rank: int | None = None
) -> list[list[Chain]]:
    """All strictly increasing chains of spherical subsets, by dimension.

    Chains whose top subset has rank above max_top_rank are dropped when
    the bound is given.  Each dimension is sorted lexicographically.
    """
    subs = poset.subsets
    if max_top_rank is not None:
        subs = [t for t in subs if len(t) <= max_top_rank]
    sups: dict[tuple[int, ...], list[tuple[int, ...]]] = {
        t: [u for u in subs if len(u) > len(t) and set(t) < set(u)] for t in subs
    }
    by_dim: list[list[Chain]] = []

    def extend(chain: Chain) -> None:
        dim = len(chain) - 1
        while len(by_dim) <= dim:
            by_dim.append([])
        by_dim[dim].append(chain)
        for u in sups[chain[-1]]:
            extend(chain + (u,))

    for t in subs:
        extend((t,))
    for level in by_dim:
        level.sort()
    return by_dim


@dataclass
class BredonComplex:
    """Assembled chain complex: cells, coordinate layout, differentials.

    differentials[k] maps degree k to degree k-1 for k >= 1; index 0
    holds the zero map out of degree 0 so lengths line up.  block_ranks
    mirror the cell lists: cell ci of dimension d occupies
    block_ranks[d][ci] consecutive coordinates starting at
    offsets[d][ci].
    """

    matrix: CoxeterMatrix
    cells: list[list[Chain]]
    block_ranks: list[list[int]]
    offsets: list[list[int]]
    dims: list[int]
    differentials: list[IntMatrix]

    @property
    def top_dimension(self) -> int:
        return len(self.cells) - 1

    def boundary(self, k: int) -> IntMatrix:
        """The map C_k -> C_{k-1}; zero maps outside the cell range."""
        if k <= 0:
            return IntMatrix.zero(0, self.dims[0] if self.dims else 0)
        if k > self.top_dimension:
            cols = 0
            rows = self.dims[k - 1] if k - 1 <= self.top_dimension else 0
            return IntMatrix.zero(rows, cols)
        return self.differentials[k]

    def homology(self, max_degree: int | None = None) -> HomologyProfile:
        top = self.top_dimension
        limit = top if max_degree is None else min(max_degree, top)
        groups = {}
        for d in range(limit + 1):
            groups[d] = homology_at(self.boundary(d), self.boundary(d + 1))
        return HomologyProfile(groups, method="chain")


def assemble_complex(
    w: CoxeterMatrix,
    rings: RepRingCache,
    poset: SphericalPoset | None = None,
    max_top_rank: int | None = None,
) -> BredonComplex:
    """Build cells and differentials for the system w.

    Realizes every spherical stabilizer (order cap applies) and fills the
    induction/identity blocks of the boundary maps.
    """
    if poset is None:
        poset = enumerate_spherical(w)
    cells = build_cells(poset, max_top_rank)
    block_ranks = [
        [rings.classes(w, chain[0]).count for chain in level] for level in cells
    ]
    offsets = []
    dims = []
    for level_ranks in block_ranks:
        level_offsets = []
        total = 0
        for r in level_ranks:
            level_offsets.append(total)
            total += r
        offsets.append(level_offsets)
        dims.append(total)

    index_of = [
        {chain: ci for ci, chain in enumerate(level)} for level in cells
    ]
    differentials = [IntMatrix.zero(0, dims[0])]
    for d in range(1, len(cells)):
        mat = IntMatrix.zero(dims[d - 1], dims[d])
        for ci, chain in enumerate(cells[d]):
            col0 = offsets[d][ci]
            for k in range(1, len(chain) + 1):
                face = chain[: k - 1] + chain[k:]
                fi = index_of[d - 1][face]
                row0 = offsets[d - 1][fi]
                sign = -1 if k % 2 else 1
                if k == 1:
                    block = rings.induction(w, chain[0], chain[1])
                    for i in range(block.nrows):
                        row = mat.rows[row0 + i]
                        brow = block.rows[i]
                        for j in range(block.ncols):
                            if brow[j]:
                                row[col0 + j] += sign * brow[j]
                else:
                    for j in range(block_ranks[d][ci]):
                        mat.rows[row0 + j][col0 + j] += sign
        differentials.append(mat)
    return BredonComplex(
        matrix=w,
        cells=cells,
        block_ranks=block_ranks,
        offsets=offsets,
        dims=dims,
        differentials=differentials,
    )


def relative_complex(full: BredonComplex, n: int) -> BredonComplex:
    """Subquotient complex of the cells whose top subset has rank n.

    Models the pair (rank-n skeleton, rank-(n-1) skeleton): faces whose
    top drops below rank n are projected away.
    """
    if n < 0:
        raise ContractError("rank must be non-negative")
    keep: list[list[int]] = []
    for level in full.cells:
        keep.append([ci for ci, chain in enumerate(level) if len(chain[-1]) == n])
    while keep and not keep[-1]:
        keep.pop()
    cells = [[full.cells[d][ci] for ci in keep[d]] for d in range(len(keep))]
    block_ranks = [
        [full.block_ranks[d][ci] for ci in keep[d]] for d in range(len(keep))
    ]
    coord_lists = []
    offsets = []
    dims = []
    for d in range(len(keep)):
        coords = []
        level_offsets = []
        for ci in keep[d]:
            level_offsets.append(len(coords))
            start = full.offsets[d][ci]
            coords.extend(range(start, start + full.block_ranks[d][ci]))
        coord_lists.append(coords)
        offsets.append(level_offsets)
        dims.append(len(coords))
    differentials = [IntMatrix.zero(0, dims[0] if dims else 0)]
    for d in range(1, len(keep)):
        old = full.differentials[d]
        rows = [
            [old.rows[r][c] for c in coord_lists[d]] for r in coord_lists[d - 1]
        ]
        differentials.append(IntMatrix(dims[d - 1], dims[d], rows))
    return BredonComplex(
        matrix=full.matrix,
        cells=cells,
        block_ranks=block_ranks,
        offsets=offsets,
        dims=dims,
        differentials=differentials,
    )


def chain_homology(
    w: CoxeterMatrix,
    rings: RepRingCache | None = None,
    max_degree: int | None = None,
) -> HomologyProfile:
    """Bredon homology of the system w along the chain-complex route."""
    if rings is None:
        rings = RepRingCache()
    return assemble_complex(w, rings).homology(max_degree)


def cell_pair_homology(
    w: CoxeterMatrix, t, rings: RepRingCache | None = None
) -> HomologyProfile:
    """Relative homology of one closed cell modulo its boundary.

    t must be spherical; the computation runs inside the subsystem on t,
    keeping only chains that reach the top rank |t|.
    """
    if rings is None:
        rings = RepRingCache()
    from .coxeter import canonical_subset, spherical_order

    t = canonical_subset(t)
    if spherical_order(w, t) is None:
        raise ContractError(f"subset {t} is not spherical")
    sub = w.submatrix(t)
    full = assemble_complex(sub, rings)
    rel = relative_complex(full, len(t))
    profile = rel.homology()
    return HomologyProfile(profile.groups, method="chain-pair")
