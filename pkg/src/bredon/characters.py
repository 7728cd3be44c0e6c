"""Complex character tables of the finite parabolics, and induction.

Tables are computed three ways, chosen by the classification of the
subgroup:

* rank 1 and dihedral parabolics get the textbook closed forms;
* reducible parabolics are tensor products of their factor tables;
* every other irreducible finite type goes through the Burnside-Dixon
  modular algorithm: common eigenvectors of the class-sum matrices over a
  prime field F_p with p = 1 mod exponent(G), lifted to C by discrete
  Fourier inversion along power maps.

A table's columns are always the conjugacy classes of the group model in
canonical order (identity first), so tables, models and induction
matrices all share one basis.  The representation ring R_C(W_T) is the
free Z-module on the rows, and induction along W_T <= W_T' is the integer
matrix of Frobenius induced-character multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, gcd, isqrt, lcm, pi, sqrt

import numpy as np

from .coxeter import CoxeterMatrix, canonical_subset, classify_subset, components
from .errors import ConsistencyError, ContractError, ResourceCapError
from .groups import (
    DEFAULT_ORDER_CAP,
    ConjugacyClasses,
    GroupModel,
    conjugacy_classes,
    realize_group,
)
from .snf import IntMatrix

VALUE_TOL = 1.0e-6
PRIME_SEARCH_BOUND = 10_000_000


@dataclass
class CharacterTable:
    """Irreducible complex characters of a finite parabolic.

    values[i, c] is the i-th character on the c-th conjugacy class;
    class_words hold one defining word per class in generator positions
    (positions index the sorted member tuple).  Row order is fixed by the
    construction path, so identical inputs give identical tables.
    """

    members: tuple[int, ...]
    order: int
    class_words: list[tuple[int, ...]]
    class_sizes: list[int]
    values: np.ndarray
    degrees: list[int]

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    @property
    def n_irreducibles(self) -> int:
        return self.values.shape[0]

    def validate(self) -> None:
        """Orthogonality and counting checks; ConsistencyError on failure."""
        k = self.n_classes
        if self.n_irreducibles != k:
            raise ConsistencyError(
                f"{self.n_irreducibles} irreducibles vs {k} classes"
            )
        if sum(self.class_sizes) != self.order:
            raise ConsistencyError("class sizes do not sum to the group order")
        if sum(d * d for d in self.degrees) != self.order:
            raise ConsistencyError("degree squares do not sum to the group order")
        ident = self.values[:, 0].real
        if np.max(np.abs(ident - np.array(self.degrees, dtype=float))) > VALUE_TOL:
            raise ConsistencyError("identity column disagrees with the degrees")
        sizes = np.array(self.class_sizes, dtype=float)
        gram = (self.values * sizes) @ self.values.conj().T / self.order
        if np.max(np.abs(gram - np.eye(k))) > VALUE_TOL:
            raise ConsistencyError("first orthogonality relations fail")


def _translate_word(word, members) -> tuple[int, ...]:
    return tuple(members[p] for p in word)


def trivial_table() -> CharacterTable:
    return CharacterTable(
        members=(),
        order=1,
        class_words=[()],
        class_sizes=[1],
        values=np.ones((1, 1), dtype=complex),
        degrees=[1],
    )


def rank1_table(model: GroupModel, classes: ConjugacyClasses) -> CharacterTable:
    """C2: trivial and sign characters."""
    if model.order != 2:
        raise ContractError("rank-1 table needs a group of order 2")
    values = np.array([[1, 1], [1, -1]], dtype=complex)
    return CharacterTable(
        members=model.members,
        order=2,
        class_words=list(classes.rep_words),
        class_sizes=list(classes.sizes),
        values=values,
        degrees=[1, 1],
    )


def dihedral_table(
    model: GroupModel, classes: ConjugacyClasses, m: int
) -> CharacterTable:
    """Closed form for I2(m) = D_m, evaluated on the model's classes.

    With generators a, b and rotation r = ab of order m the irreducibles
    are: the trivial and sign characters; for even m the two further
    linear characters hat-chi3 (+1 on the class of a, -1 on the class of
    b, (-1)^k on r^k) and hat-chi4 = sign * hat-chi3; and the
    two-dimensional phi_l with phi_l(r^k) = 2 cos(2 pi l k / m) and 0 on
    reflections, for l = 1 .. ceil(m/2) - 1.
    """
    a_el, b_el = model.gen_elements
    rot = model.mult(a_el, b_el)
    rot_k = {}
    cur = 0
    for k in range(m):
        rot_k[cur] = k
        cur = model.mult(cur, rot)
    if cur != 0:
        raise ConsistencyError("rotation order disagrees with the edge label")

    reps = classes.reps
    is_reflection = [len(model.words[e]) % 2 == 1 for e in reps]
    even = m % 2 == 0
    n_two_dim = m // 2 - 1 if even else (m - 1) // 2
    rows = 2 + (2 if even else 0) + n_two_dim
    values = np.zeros((rows, len(reps)), dtype=complex)
    a_class = int(classes.class_of[a_el])
    b_class = int(classes.class_of[b_el])
    base = 3 if even else 1
    for c, e in enumerate(reps):
        if is_reflection[c]:
            values[0, c] = 1
            values[1, c] = -1
            if even:
                if c not in (a_class, b_class):
                    raise ConsistencyError("reflection outside the two generator classes")
                sign = 1 if c == a_class else -1
                values[2, c] = sign
                values[3, c] = -sign
            # two-dimensional characters vanish on reflections
        else:
            k = rot_k[e]
            values[0, c] = 1
            values[1, c] = 1
            if even:
                values[2, c] = (-1) ** k
                values[3, c] = (-1) ** k
            for l in range(1, n_two_dim + 1):
                values[base + l, c] = 2 * cos(2 * pi * l * k / m)
    degrees = [1, 1] + ([1, 1] if even else []) + [2] * n_two_dim
    return CharacterTable(
        members=model.members,
        order=2 * m,
        class_words=list(classes.rep_words),
        class_sizes=list(classes.sizes),
        values=values,
        degrees=degrees,
    )


def tensor_table(p: CharacterTable, q: CharacterTable) -> CharacterTable:
    """Character table of a direct product from factor tables.

    Classes are the pairs (row-major, p outer and q inner) and characters
    are products; member sets must be disjoint.  Class words concatenate
    after translating both factors into the merged position space.
    """
    if set(p.members) & set(q.members):
        raise ContractError("tensor factors share generators")
    members = tuple(sorted(p.members + q.members))
    pos = {g: i for i, g in enumerate(members)}

    def merge(wp, wq, src_p, src_q):
        amb = [src_p[i] for i in wp] + [src_q[i] for i in wq]
        return tuple(pos[g] for g in amb)

    class_words = []
    class_sizes = []
    for a, wp in enumerate(p.class_words):
        for b, wq in enumerate(q.class_words):
            class_words.append(merge(wp, wq, p.members, q.members))
            class_sizes.append(p.class_sizes[a] * q.class_sizes[b])
    values = np.kron(p.values, q.values)
    degrees = [dp * dq for dp in p.degrees for dq in q.degrees]
    return CharacterTable(
        members=members,
        order=p.order * q.order,
        class_words=class_words,
        class_sizes=class_sizes,
        values=values,
        degrees=degrees,
    )


# ---------------------------------------------------------------------------
# Burnside-Dixon: modular character table of an arbitrary finite model
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _find_prime(exponent: int, minimum: int) -> int:
    p = exponent + 1
    while p <= minimum or not _is_prime(p):
        p += exponent
        if p > PRIME_SEARCH_BOUND:
            raise ResourceCapError(
                f"no prime = 1 mod {exponent} found below {PRIME_SEARCH_BOUND}"
            )
    return p


def _primitive_root(p: int) -> int:
    n = p - 1
    factors = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    raise ConsistencyError("no primitive root found")


def _mod_rref_columns(cols: np.ndarray, p: int):
    """Column-reduce mod p; returns (columns, pivot_rows) with each pivot
    entry 1 and its row cleared in the other columns."""
    cols = cols.astype(np.int64) % p
    k, d = cols.shape
    pivots = []
    for t in range(d):
        pr = -1
        for r in range(k):
            if r not in pivots and cols[r, t] % p:
                pr = r
                break
        if pr < 0:
            raise ConsistencyError("dependent columns in subspace basis")
        inv = pow(int(cols[pr, t]), -1, p)
        cols[:, t] = cols[:, t] * inv % p
        for u in range(d):
            if u != t and cols[pr, u]:
                cols[:, u] = (cols[:, u] - int(cols[pr, u]) * cols[:, t]) % p
        pivots.append(pr)
    return cols, pivots


def _mod_coords(cols, pivots, vec, p):
    """Coordinates of vec in an echelonized column basis; vec must lie in
    the span, which is an invariance statement for our callers."""
    coeffs = np.array([vec[r] for r in pivots], dtype=np.int64) % p
    residual = (vec - cols @ coeffs) % p
    if np.any(residual):
        raise ConsistencyError("class-sum matrix left an invariant subspace")
    return coeffs

def _mod_nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the nullspace of a square matrix mod p."""
    a = mat % p
    d = a.shape[0]
    a = a.astype(np.int64)
    pivot_of_col: dict[int, int] = {}
    row = 0
    for col in range(d):
        sel = None
        for r in range(row, d):
            if a[r, col] % p:
                sel = r
                break
        if sel is None:
            continue
        a[[row, sel]] = a[[sel, row]]
        inv = pow(int(a[row, col]), -1, p)
        a[row] = a[row] * inv % p
        for r in range(d):
            if r != row and a[r, col]:
                a[r] = (a[r] - int(a[r, col]) * a[row]) % p
        pivot_of_col[col] = row
        row += 1
    free_cols = [c for c in range(d) if c not in pivot_of_col]
    basis = np.zeros((d, len(free_cols)), dtype=np.int64)
    for idx, fc in enumerate(free_cols):
        basis[fc, idx] = 1
        for col, r in pivot_of_col.items():
            basis[col, idx] = (-a[r, fc]) % p
    return basis


def _mod_det(mat: np.ndarray, p: int) -> int:
    a = mat.astype(np.int64) % p
    d = a.shape[0]
    det = 1
    for col in range(d):
        sel = None
        for r in range(col, d):
            if a[r, col] % p:
                sel = r
                break
        if sel is None:
            return 0
        if sel != col:
            a[[col, sel]] = a[[sel, col]]
            det = -det
        det = det * int(a[col, col]) % p
        inv = pow(int(a[col, col]), -1, p)
        for r in range(col + 1, d):
            if a[r, col]:
                a[r] = (a[r] - int(a[r, col]) * inv % p * a[col]) % p
    return det % p


def _charpoly_roots(mat: np.ndarray, p: int) -> list[int]:
    """Roots in F_p of det(mat - x I), by interpolation then a full scan."""
    d = mat.shape[0]
    xs = list(range(d + 1))
    ys = [_mod_det((mat - x * np.eye(d, dtype=np.int64)) % p, p) for x in xs]
    # Lagrange interpolation of the degree-d polynomial through (xs, ys)
    coeffs = np.zeros(d + 1, dtype=np.int64)  # coeffs[i] multiplies x^i
    for x0, y0 in zip(xs, ys):
        num = np.zeros(1, dtype=object)
        num = np.array([1], dtype=object)
        denom = 1
        for x1 in xs:
            if x1 == x0:
                continue
            # multiply num by (x - x1)
            shifted = np.concatenate(([0], num))
            scaled = np.concatenate((num * (-x1), [0]))
            num = (shifted + scaled) % p
            denom = denom * (x0 - x1) % p
        scale = y0 * pow(int(denom % p), -1, p) % p
        coeffs = (coeffs + num * scale) % p
    lam = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs[::-1]:
        acc = (acc * lam + int(c)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _structure_matrices(model: GroupModel, classes: ConjugacyClasses, p: int):
    """Class-algebra structure constants a_{ijk} mod p, as matrices
    A[i][j, k]: with z fixed in class k, a_{ijk} counts x in class i with
    x^{-1} z in class j."""
    n = model.order
    k = classes.count
    perms = model.perms
    inv_perms = np.argsort(perms, axis=1).astype(np.int32)
    inv_idx = np.empty(n, dtype=np.int64)
    for x in range(n):
        inv_idx[x] = model.index[inv_perms[x].tobytes()]
    p_inv = perms[inv_idx]
    class_of = classes.class_of.astype(np.int64)
    a = np.zeros((k, k, k), dtype=np.int64)
    for kk, z in enumerate(classes.reps):
        rows = p_inv[:, perms[z]]
        j_arr = np.empty(n, dtype=np.int64)
        for x in range(n):
            j_arr[x] = class_of[model.index[rows[x].tobytes()]]
        np.add.at(a, (class_of, j_arr, np.full(n, kk, dtype=np.int64)), 1)
    return a % p, inv_idx


def _split_eigenvectors(mats: np.ndarray, p: int) -> list[np.ndarray]:
    """Common eigenvectors (columns, normalized so entry 0 is 1) of the
    commuting family mats[1:], by deterministic eigenspace refinement."""
    k = mats.shape[1]
    spaces = [_mod_rref_columns(np.eye(k, dtype=np.int64), p)]
    for i in range(1, mats.shape[0]):
        if all(u.shape[1] == 1 for u, _ in spaces):
            break
        a = mats[i]
        refined = []
        for cols, pivots in spaces:
            d = cols.shape[1]
            if d == 1:
                refined.append((cols, pivots))
                continue
            image = a @ cols % p
            r = np.zeros((d, d), dtype=np.int64)
            for t in range(d):
                r[:, t] = _mod_coords(cols, pivots, image[:, t], p)
            roots = _charpoly_roots(r, p)
            if len(roots) <= 1:
                refined.append((cols, pivots))
                continue
            total = 0
            for lam in roots:
                ns = _mod_nullspace((r - lam * np.eye(d, dtype=np.int64)) % p, p)
                if ns.shape[1] == 0:
                    continue
                total += ns.shape[1]
                sub = cols @ ns % p
                refined.append(_mod_rref_columns(sub, p))
            if total != d:
                raise ConsistencyError("eigenspace refinement lost dimensions")
        spaces = refined
    vectors = []
    for cols, _ in spaces:
        if cols.shape[1] != 1:
            raise ConsistencyError("class-sum matrices failed to split completely")
        v = cols[:, 0] % p
        if v[0] == 0:
            raise ConsistencyError("central character vanishes at the identity")
        vectors.append(v * pow(int(v[0]), -1, p) % p)
    return vectors


def dixon_table(model: GroupModel, classes: ConjugacyClasses) -> CharacterTable:
    """Burnside-Dixon character table of an arbitrary finite model."""
    k = classes.count
    order = model.order
    rep_orders = [model.element_order(e) for e in classes.reps]
    exponent = lcm(*rep_orders) if rep_orders else 1
    p = _find_prime(exponent, max(int(2 * sqrt(order)) + 1, k + 2, exponent + 1))

    mats, inv_idx = _structure_matrices(model, classes, p)
    omegas = _split_eigenvectors(mats, p)
    if len(omegas) != k:
        raise ConsistencyError(f"found {len(omegas)} central characters, expected {k}")

    sizes = np.array(classes.sizes, dtype=np.int64)
    inv_sizes = np.array([pow(int(s), -1, p) for s in classes.sizes], dtype=np.int64)
    class_inv = np.array(
        [int(classes.class_of[int(inv_idx[e])]) for e in classes.reps], dtype=np.int64
    )

    degrees = []
    chi_bar = np.zeros((k, k), dtype=np.int64)
    for t, omega in enumerate(omegas):
        denom = int(np.sum(omega * omega[class_inv] % p * inv_sizes % p) % p)
        if denom == 0:
            raise ConsistencyError("degree denominator vanished mod p")
        d_sq = order * pow(denom, -1, p) % p
        d_t = next(
            (d for d in range(1, isqrt(order) + 1) if d * d % p == d_sq), None
        )
        if d_t is None:
            raise ConsistencyError("no integer degree matches mod p")
        degrees.append(d_t)
        chi_bar[t] = d_t * omega % p * inv_sizes % p

    # power maps: class of rep_i^l for l = 0..exponent-1
    power_class = np.zeros((k, exponent), dtype=np.int64)
    for i, e in enumerate(classes.reps):
        cur = 0
        for l in range(exponent):
            power_class[i, l] = classes.class_of[cur]
            cur = model.mult(cur, e)

    theta = pow(_primitive_root(p), (p - 1) // exponent, p)
    theta_pow = np.array(
        [pow(theta, j, p) for j in range(exponent)], dtype=np.int64
    )
    # fourier[j, l] = theta^(-j l)
    fourier = theta_pow[(-np.outer(np.arange(exponent), np.arange(exponent))) % exponent]
    inv_e = pow(exponent, -1, p)
    zeta = np.exp(2j * pi * np.arange(exponent) / exponent)

    values = np.zeros((k, k), dtype=complex)
    for t in range(k):
        evals = chi_bar[t][power_class]  # (k, exponent): chi_bar at powers
        mults = (evals @ fourier.T) % p * inv_e % p  # (k, exponent)
        if np.any(mults > degrees[t]):
            raise ConsistencyError("lifted multiplicities exceed the degree")
        if np.any(np.sum(mults, axis=1) != degrees[t]):
            raise ConsistencyError("lifted multiplicities do not sum to the degree")
        values[t] = mults @ zeta

    row_order = sorted(
        range(k),
        key=lambda t: (
            degrees[t],
            tuple(
                (round(values[t, c].real, 6), round(values[t, c].imag, 6))
                for c in range(k)
            ),
        ),
    )
    return CharacterTable(
        members=model.members,
        order=order,
        class_words=list(classes.rep_words),
        class_sizes=list(classes.sizes),
        values=values[row_order],
        degrees=[degrees[t] for t in row_order],
    )


# ---------------------------------------------------------------------------
# Induction and restriction between nested parabolics
# ---------------------------------------------------------------------------


def _round_int_matrix(raw: np.ndarray, what: str) -> IntMatrix:
    if raw.size and np.max(np.abs(raw.imag)) > VALUE_TOL:
        raise ConsistencyError(f"{what} has a complex entry")
    nearest = np.round(raw.real)
    if raw.size and np.max(np.abs(raw.real - nearest)) > VALUE_TOL:
        raise ConsistencyError(f"{what} has a non-integer entry")
    if raw.size and np.min(nearest) < 0:
        raise ConsistencyError(f"{what} has a negative entry")
    return IntMatrix.from_rows(nearest.astype(int).tolist())


def induction_matrix(
    sub: CharacterTable, big: CharacterTable, embedding: list[int]
) -> IntMatrix:
    """Multiplicity matrix of induction R(W_T) -> R(W_T').

    embedding[j] is the big-group class that the j-th sub-group class
    fuses into.  Rows are big irreducibles, columns sub irreducibles, so
    composing matrices composes inductions.  Uses the class-wise Frobenius
    formula for the induced character, then inner products.
    """
    if big.order % sub.order:
        raise ContractError("subgroup order does not divide the group order")
    ind_vals = np.zeros((sub.n_irreducibles, big.n_classes), dtype=complex)
    for j, c in enumerate(embedding):
        ind_vals[:, c] += sub.class_sizes[j] * sub.values[:, j]
    scale = np.array(
        [
            big.order / (sub.order * size)
            for size in big.class_sizes
        ]
    )
    ind_vals *= scale
    sizes = np.array(big.class_sizes, dtype=float)
    raw = (big.values * sizes) @ ind_vals.conj().T / big.order
    mat = _round_int_matrix(raw, "induction matrix")
    index = big.order // sub.order
    for j in range(sub.n_irreducibles):
        total = sum(mat.rows[i][j] * big.degrees[i] for i in range(big.n_irreducibles))
        if total != index * sub.degrees[j]:
            raise ConsistencyError(
                "induced degree mismatch: column "
                f"{j} gives {total}, expected {index * sub.degrees[j]}"
            )
    return mat


def restriction_matrix(
    sub: CharacterTable, big: CharacterTable, embedding: list[int]
) -> IntMatrix:
    """Multiplicities of sub irreducibles in restricted big irreducibles.

    By Frobenius reciprocity this equals induction_matrix on the same
    data, but it is computed by the independent route (evaluate big
    characters on sub classes, then decompose), which makes it the test
    oracle for induction.
    """
    rest_vals = big.values[:, embedding]
    sizes = np.array(sub.class_sizes, dtype=float)
    raw = (rest_vals * sizes) @ sub.values.conj().T / sub.order
    mat = _round_int_matrix(raw, "restriction matrix")
    for i in range(big.n_irreducibles):
        total = sum(mat.rows[i][j] * sub.degrees[j] for j in range(sub.n_irreducibles))
        if total != big.degrees[i]:
            raise ConsistencyError("restricted degree mismatch")
    return mat


# ---------------------------------------------------------------------------
# Cache: models, classes, tables, inductions, keyed by induced matrices
# ---------------------------------------------------------------------------


class RepRingCache:
    """Shared store of realized parabolics and their character data.

    Everything is keyed by the induced Coxeter matrix, so isomorphic
    parabolics of different systems are computed once.  Models and tables
    are positional: their generators are 0..k-1 of the induced system,
    and callers translate subset positions at the boundary.
    """

    def __init__(self, order_cap: int = DEFAULT_ORDER_CAP):
        self.order_cap = order_cap
        self._models: dict = {}
        self._classes: dict = {}
        self._tables: dict = {}
        self._inductions: dict = {}

    def model(self, w: CoxeterMatrix, t) -> GroupModel:
        sub = w.submatrix(canonical_subset(t))
        key = sub.m
        if key not in self._models:
            self._models[key] = realize_group(
                sub, sub.generators, order_cap=self.order_cap
            )
        return self._models[key]

    def classes(self, w: CoxeterMatrix, t) -> ConjugacyClasses:
        sub = w.submatrix(canonical_subset(t))
        key = sub.m
        if key not in self._classes:
            self._classes[key] = conjugacy_classes(self.model(w, t))
        return self._classes[key]

    def table(self, w: CoxeterMatrix, t) -> CharacterTable:
        sub = w.submatrix(canonical_subset(t))
        key = sub.m
        if key not in self._tables:
            self._tables[key] = self._build_table(sub)
        return self._tables[key]

    def _build_table(self, sub: CoxeterMatrix) -> CharacterTable:
        t = sub.generators
        if len(t) == 0:
            table = trivial_table()
            table.validate()
            return table
        model = self.model(sub, t)
        classes = self.classes(sub, t)
        parts = components(sub, t)
        if len(parts) == 1:
            label = classify_subset(sub, t)[0]
            if label.family == "A" and label.rank == 1:
                table = rank1_table(model, classes)
            elif label.family == "I":
                table = dihedral_table(model, classes, label.edge)
            else:
                table = dixon_table(model, classes)
        else:
            table = self._product_table(sub, model, classes, parts)
        table.validate()
        return table

    def _product_table(self, sub, model, classes, parts) -> CharacterTable:
        factors = [self.table(sub, part) for part in parts]
        # factor tables are positional in their part; re-address them into
        # the ambient positions of sub before tensoring
        addressed = []
        for part, table in zip(parts, factors):
            addressed.append(
                CharacterTable(
                    members=part,
                    order=table.order,
                    class_words=table.class_words,
                    class_sizes=table.class_sizes,
                    values=table.values,
                    degrees=table.degrees,
                )
            )
        combined = addressed[0]
        for nxt in addressed[1:]:
            combined = tensor_table(combined, nxt)
        # align the abstract product classes with the model's classes
        col_map = [-1] * len(combined.class_words)
        for a, word in enumerate(combined.class_words):
            e = model.evaluate_word(word)
            col_map[a] = int(classes.class_of[e])
        if sorted(col_map) != list(range(classes.count)):
            raise ConsistencyError("product classes do not match the model's classes")
        values = np.zeros_like(combined.values)
        sizes = [0] * classes.count
        for a, c in enumerate(col_map):
            values[:, c] = combined.values[:, a]
            sizes[c] = combined.class_sizes[a]
        if sizes != list(classes.sizes):
            raise ConsistencyError("product class sizes disagree with the model")
        return CharacterTable(
            members=model.members,
            order=model.order,
            class_words=list(classes.rep_words),
            class_sizes=list(classes.sizes),
            values=values,
            degrees=combined.degrees,
        )

    def embedding(self, w: CoxeterMatrix, t1, t2) -> list[int]:
        """Class fusion of W_T1 into W_T2: evaluate each T1 class word in
        the T2 model and look up its class."""
        t1 = canonical_subset(t1)
        t2 = canonical_subset(t2)
        if not set(t1) <= set(t2):
            raise ContractError(f"{t1} is not contained in {t2}")
        sub_tab = self.table(w, t1)
        big_model = self.model(w, t2)
        big_classes = self.classes(w, t2)
        pos_in_big = {g: i for i, g in enumerate(t2)}
        out = []
        for word in sub_tab.class_words:
            translated = tuple(pos_in_big[t1[p]] for p in word)
            e = big_model.evaluate_word(translated)
            out.append(int(big_classes.class_of[e]))
        return out

    def induction(self, w: CoxeterMatrix, t1, t2) -> IntMatrix:
        """Induction multiplicities R(W_T1) -> R(W_T2) for T1 inside T2."""
        t1 = canonical_subset(t1)
        t2 = canonical_subset(t2)
        key = (w.submatrix(t2).m, tuple(t2.index(g) for g in t1))
        if key not in self._inductions:
            emb = self.embedding(w, t1, t2)
            self._inductions[key] = induction_matrix(
                self.table(w, t1), self.table(w, t2), emb
            )
        return self._inductions[key]
