"""Bredon homology and equivariant K-theory of Coxeter groups.

The package takes a Coxeter matrix, enumerates the spherical subsets,
realizes their finite parabolics with character tables and induction
maps, assembles the Bredon chain complex of the Davis complex with
representation-ring coefficients, and computes its homology exactly.
Closed-form theorems (finite, right-angled, even, low-rank, Kunneth)
provide independent cross-checks, and when homology is concentrated in
degrees 0 and 1 the equivariant K-homology and the K-theory of the
reduced group C*-algebra are read off via Baum-Connes.
"""

from .abelian import FgAbGroup, HomologyProfile
from .chains import (
    BredonComplex,
    assemble_complex,
    build_cells,
    cell_pair_homology,
    chain_homology,
    relative_complex,
)
from .characters import (
    CharacterTable,
    RepRingCache,
    dihedral_table,
    dixon_table,
    induction_matrix,
    restriction_matrix,
    tensor_table,
)
from .coxeter import (
    CoxeterMatrix,
    SphericalPoset,
    classify_irreducible,
    classify_subset,
    components,
    enumerate_spherical,
    is_spherical,
    numeric_finiteness_check,
    parse_matrix,
    spherical_order,
)
from .errors import (
    BredonError,
    ConsistencyError,
    ContractError,
    MatrixError,
    ResourceCapError,
)
from .formulas import (
    KTheoryVerdict,
    applicable_closed_forms,
    closed_form_homology,
    dihedral_class_count,
    even_homology,
    finite_homology,
    k_homology,
    kunneth_product,
    lowrank_catalog,
    odd_dihedral_cell_formula,
    relative_cell_formula,
    right_angled_homology,
)
from .groups import GroupModel, conjugacy_classes, realize_group
from .snf import IntMatrix, homology_at, kernel_basis, smith_normal_form

__version__ = "0.1.0"
