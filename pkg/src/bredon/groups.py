"""Concrete models of finite standard parabolics as root permutations.

W_T acts on its root system in the reflection representation; each
generator s_i sends v to v - 2 B(a_i, v) a_i.  The full root set is the
closure of the simple roots under the generators, computed in simple-root
coordinates with a matching tolerance.  Elements are then stored as exact
permutations of the root list, so everything downstream (multiplication,
conjugacy, character work) is integer-exact; floats only enter while the
root set is being built.

Generators inside a model are addressed by *position* in the sorted
subset, which makes models reusable across systems that induce the same
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coxeter import CoxeterMatrix, canonical_subset, cosine_matrix, spherical_order
from .errors import ConsistencyError, ContractError, ResourceCapError

DEFAULT_ORDER_CAP = 14400

_MATCH_TOL = 1.0e-9
_KEY_DECIMALS = 6  # root coordinates of the finite types are >> 1e-6 apart


def _root_key(vec: np.ndarray) -> tuple:
    rounded = np.round(vec, _KEY_DECIMALS)
    rounded += 0.0  # normalizes -0.0
    return tuple(rounded.tolist())


@dataclass
class GroupModel:
    """Finite parabolic W_T realized on its root system.

    perms[k] is the permutation of the root list given by element k, as an
    int32 row; words[k] is a defining word in generator positions
    (0..len(members)-1), shortest for its element.  Element 0 is the
    identity.
    """

    members: tuple[int, ...]
    order: int
    perms: np.ndarray
    words: list[tuple[int, ...]]
    index: dict[bytes, int]
    gen_elements: tuple[int, ...]

    @property
    def nroots(self) -> int:
        return self.perms.shape[1]

    def mult(self, i: int, j: int) -> int:
        """Index of element i . j (i applied after j)."""
        return self.index[self.perms[i][self.perms[j]].tobytes()]

    def inverse(self, i: int) -> int:
        inv = np.argsort(self.perms[i]).astype(np.int32)
        return self.index[inv.tobytes()]

    def evaluate_word(self, word) -> int:
        """Element index of a product of generator positions."""
        cur = 0
        for pos in word:
            cur = self.mult(cur, self.gen_elements[pos])
        return cur

    def element_order(self, i: int) -> int:
        n, cur = 1, i
        while cur != 0:
            cur = self.mult(cur, i)
            n += 1
        return n


def realize_group(
    w: CoxeterMatrix, t, order_cap: int = DEFAULT_ORDER_CAP
) -> GroupModel:
    """Build the root-permutation model of a spherical W_T.

    Raises ResourceCapError when the classified order exceeds order_cap
    and ConsistencyError when the closure does not reproduce that order.
    """
    t = canonical_subset(t)
    order = spherical_order(w, t)
    if order is None:
        raise ContractError(f"subset {t} is not spherical")
    if order > order_cap:
        raise ResourceCapError(
            f"|W_T| = {order} exceeds the order cap {order_cap}"
        )
    k = len(t)
    if k == 0:
        perms = np.zeros((1, 0), dtype=np.int32)
        return GroupModel(
            members=t,
            order=1,
            perms=perms,
            words=[()],
            index={perms[0].tobytes(): 0},
            gen_elements=(),
        )

    b = cosine_matrix(w, t)
    reflections = []
    for i in range(k):
        mat = np.eye(k)
        mat[i, :] -= 2.0 * b[i, :]
        reflections.append(mat)

    # close the simple roots under all reflections
    roots: list[np.ndarray] = []
    lookup: dict[tuple, int] = {}
    queue = []
    for i in range(k):
        vec = np.zeros(k)
        vec[i] = 1.0
        lookup[_root_key(vec)] = len(roots)
        roots.append(vec)
        queue.append(vec)
    while queue:
        vec = queue.pop()
        for mat in reflections:
            img = mat @ vec
            key = _root_key(img)
            if key not in lookup:
                lookup[key] = len(roots)
                roots.append(img)
                queue.append(img)

    nroots = len(roots)
    gen_perms = np.zeros((k, nroots), dtype=np.int32)
    for i, mat in enumerate(reflections):
        for r, vec in enumerate(roots):
            img = mat @ vec
            key = _root_key(img)
            if key not in lookup:
                raise ConsistencyError("root set failed to close")
            target = lookup[key]
            if np.max(np.abs(img - roots[target])) > _MATCH_TOL:
                raise ConsistencyError("root matching exceeded tolerance")
            gen_perms[i, r] = target

    identity = np.arange(nroots, dtype=np.int32)
    perm_rows = [identity]
    words: list[tuple[int, ...]] = [()]
    index = {identity.tobytes(): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            base = perm_rows[ei]
            word = words[ei]
            for g in range(k):
                row = base[gen_perms[g]]
                key = row.tobytes()
                if key not in index:
                    if len(perm_rows) >= order:
                        raise ConsistencyError(
                            f"closure exceeded the classified order {order}"
                        )
                    index[key] = len(perm_rows)
                    perm_rows.append(row)
                    words.append(word + (g,))
                    nxt.append(index[key])
        frontier = nxt
    if len(perm_rows) != order:
        raise ConsistencyError(
            f"closure produced {len(perm_rows)} elements, classification says {order}"
        )

    perms = np.vstack(perm_rows)
    gen_elements = tuple(index[gen_perms[g].tobytes()] for g in range(k))
    return GroupModel(
        members=t,
        order=order,
        perms=perms,
        words=words,
        index=index,
        gen_elements=gen_elements,
    )


@dataclass
class ConjugacyClasses:
    """Conjugacy classes in canonical order.

    Classes are sorted by (word length, word) of their representative,
    the representative being the member with the least such key; the
    identity class is first.  class_of[k] is the class index of element k.
    """

    reps: list[int]
    rep_words: list[tuple[int, ...]]
    sizes: list[int]
    class_of: np.ndarray

    @property
    def count(self) -> int:
        return len(self.reps)


def conjugacy_classes(model: GroupModel) -> ConjugacyClasses:
    """Orbit expansion under conjugation by the (involutive) generators."""
    n = model.order
    perms = model.perms
    class_of = np.full(n, -1, dtype=np.int32)
    raw: list[list[int]] = []
    for start in range(n):
        if class_of[start] >= 0:
            continue
        label = len(raw)
        orbit = [start]
        class_of[start] = label
        queue = [start]
        while queue:
            x = queue.pop()
            px = perms[x]
            for g in model.gen_elements:
                pg = perms[g]
                row = pg[px[pg]]
                y = model.index[row.tobytes()]
                if class_of[y] < 0:
                    class_of[y] = label
                    orbit.append(y)
                    queue.append(y)
        raw.append(orbit)

    def rep_key(e: int):
        word = model.words[e]
        return (len(word), word)

    reps = [min(orbit, key=rep_key) for orbit in raw]
    order = sorted(range(len(raw)), key=lambda c: rep_key(reps[c]))
    relabel = {old: new for new, old in enumerate(order)}
    class_of = np.array([relabel[c] for c in class_of], dtype=np.int32)
    reps = [reps[c] for c in order]
    sizes = [len(raw[c]) for c in order]
    return ConjugacyClasses(
        reps=reps,
        rep_words=[model.words[e] for e in reps],
        sizes=sizes,
        class_of=class_of,
    )
