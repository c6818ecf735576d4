"""Isometries and finite isometry groups of lattices.

An isometry is an integer matrix P acting on basis coordinates by
v -> v P (row convention), so P G P^t = G. Groups are stored by full
element enumeration; invariant and coinvariant sublattices, discriminant
actions and the frame-based isometries of the holy construction all
reduce to exact kernel and transport computations.
"""

import math
from fractions import Fraction

from . import enumeration, linalg
from .discforms import discriminant_data
from .lattice import Lattice

GROUP_ORDER_CAP = 10 ** 6


class Isometry:
    """An isometry of a lattice, v -> v P on basis coordinates."""

    def __init__(self, lattice, matrix, check=True):
        matrix = [list(map(int, row)) for row in matrix]
        if check and not is_isometry(lattice, matrix):
            raise ValueError("matrix does not preserve the Gram matrix")
        self.lattice = lattice
        self.matrix = matrix

    def apply(self, v):
        from .lattice import LatticeVector
        return LatticeVector(self.lattice, linalg.vec_mat(v.coords, self.matrix))

    def compose(self, other):
        """self followed by other."""
        return Isometry(self.lattice,
                        linalg.mat_mul(self.matrix, other.matrix), check=False)

    def inverse(self):
        inv = linalg.inverse(self.matrix)
        return Isometry(self.lattice, linalg.frac_to_int(inv), check=False)

    def order(self, cap=GROUP_ORDER_CAP):
        n = self.lattice.rank
        ident = linalg.identity(n)
        P = self.matrix
        k = 1
        while P != ident:
            P = linalg.mat_mul(P, self.matrix)
            k += 1
            if k > cap:
                raise RuntimeError("order exceeds cap")
        return k

    def is_identity(self):
        return self.matrix == linalg.identity(self.lattice.rank)

    def to_json(self):
        return {"lattice": self.lattice.name or "",
                "matrix": [row[:] for row in self.matrix]}

    def __repr__(self):
        return f"<isometry of {self.lattice!r}>"


def is_isometry(L, P):
    """True iff P preserves the Gram matrix and is invertible over Z."""
    if len(P) != L.rank or any(len(row) != L.rank for row in P):
        return False
    if linalg.mat_mul(linalg.mat_mul(P, L.gram), linalg.transpose(P)) != L.gram:
        return False
    return abs(linalg.det(P)) == 1


def identity_isometry(L):
    return Isometry(L, linalg.identity(L.rank), check=False)


def minus_identity(L):
    return Isometry(L, [[-int(i == j) for j in range(L.rank)]
                        for i in range(L.rank)], check=False)


class IsometryGroup:
    """A finite group of isometries, stored by explicit elements."""

    def __init__(self, lattice, generators, elements):
        self.lattice = lattice
        self.generators = generators
        self.elements = elements

    @property
    def order(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def group_closure(generators, cap=GROUP_ORDER_CAP):
    """Breadth-first closure of a generator list into a full group."""
    if not generators:
        raise ValueError("need at least one generator")
    L = generators[0].lattice
    n = L.rank
    for g in generators:
        if g.lattice is not L:
            raise ValueError("generators act on different lattices")
    ident = tuple(tuple(row) for row in linalg.identity(n))
    gens = [tuple(tuple(row) for row in g.matrix) for g in generators]
    seen = {ident}
    queue = [ident]
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = tuple(tuple(sum(cur[i][k] * g[k][j] for k in range(n))
                              for j in range(n)) for i in range(n))
            if nxt not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(
                        f"group not verified finite within cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    elements = [Isometry(L, [list(row) for row in m], check=False)
                for m in sorted(seen)]
    return IsometryGroup(L, generators, elements)


def _matrices(group_or_gens):
    if isinstance(group_or_gens, IsometryGroup):
        return group_or_gens.lattice, [g.matrix for g in group_or_gens.generators]
    gens = list(group_or_gens)
    return gens[0].lattice, [g.matrix for g in gens]


def invariant_lattice(group_or_gens, name=None):
    """T_G: the saturated sublattice fixed by every generator."""
    L, mats = _matrices(group_or_gens)
    n = L.rank
    if not mats:
        return L.sublattice(linalg.identity(n), name=name)
    stacked = [[] for _ in range(n)]
    for P in mats:
        for i in range(n):
            for j in range(n):
                stacked[i].append(P[i][j] - int(i == j))
    ker = linalg.kernel_basis(stacked)
    return L.sublattice(ker, name=name)


def coinvariant_lattice(group_or_gens, name=None):
    """S_G: the orthogonal complement of the invariant lattice."""
    return invariant_lattice(group_or_gens).orthogonal_complement(name=name)


def torsion_check(group):
    """|G| * b lies in T_G + S_G for every basis vector b."""
    L = group.lattice
    T = invariant_lattice(group)
    S = T.orthogonal_complement()
    rows = T.coords + S.coords
    order = group.order
    for i in range(L.rank):
        target = [order * int(j == i) for j in range(L.rank)]
        x = linalg.solve_in_rowspace(rows, target)
        if x is None or any(c.denominator != 1 for c in x):
            return False
    return True


def discriminant_action(L, isometry):
    """The induced action on A_L: "trivial" or a generator-image table."""
    data = discriminant_data(L)
    if data.form.is_trivial():
        return "trivial"
    images = []
    for g in data.gens:
        img = [sum(Fraction(a) * isometry.matrix[k][j]
                   for k, a in enumerate(g)) for j in range(L.rank)]
        images.append(data.class_coords(img))
    k = data.form.length
    trivial = all(img == tuple(int(i == j) for j in range(k))
                  for i, img in enumerate(images))
    return "trivial" if trivial else images


def group_acts_trivially_on_discriminant(L, group_or_gens):
    _, mats = _matrices(group_or_gens)
    return all(discriminant_action(L, Isometry(L, P, check=False)) == "trivial"
               for P in mats)


def leech_pair_check(M, group_or_gens):
    """The four defining conditions of a Leech pair, as a dict of booleans."""
    L, mats = _matrices(group_or_gens)
    if L is not M:
        raise ValueError("group does not act on the given lattice")
    plus, minus = M.signature()
    negdef = plus == 0 and minus == M.rank
    rootfree = not enumeration.has_roots(M) if negdef else False
    trivial = group_acts_trivially_on_discriminant(M, group_or_gens)
    coinv = invariant_lattice(group_or_gens).rank == 0
    return {
        "negative_definite": negdef,
        "no_minus_two_vectors": rootfree,
        "trivial_discriminant_action": trivial,
        "coinvariant_is_whole": coinv,
    }


def reflection(L, v):
    """The reflection x -> x - 2(x,v)/q(v) v, when it is integral."""
    q = v.norm()
    if q == 0:
        raise ValueError("cannot reflect along an isotropic vector")
    n = L.rank
    rows = []
    for i in range(n):
        e = [int(j == i) for j in range(n)]
        pair = 2 * linalg.dot(e, v.coords, L.gram)
        if pair % q:
            raise ValueError(f"reflection along {v.coords} is not integral "
                             f"(2(e_{i},v) = {pair} not divisible by q(v) = {q})")
        rows.append([e[j] - (pair // q) * v.coords[j] for j in range(n)])
    return Isometry(L, rows)


def extend_by_identity(isometry, gluing):
    """Extend g on S to the glued overlattice, acting as Id on T.

    Requires g to act trivially on A_S; otherwise the block map does not
    preserve the overlattice.
    """
    S = gluing.s_sub
    g = isometry
    if g.lattice.gram != S.gram:
        raise ValueError("isometry does not act on the glued S factor")
    if discriminant_action(g.lattice, g) != "trivial":
        raise ValueError("isometry acts nontrivially on the discriminant "
                         "group, so no extension by the identity exists")
    L = gluing.lattice
    n = L.rank
    ns, nt = S.rank, gluing.t_sub.rank
    # block map on the S+T coordinate space, conjugated into L's basis
    split = S.coords + gluing.t_sub.coords  # rows: S+T basis in L's basis
    block = [row[:] + [0] * nt for row in g.matrix] + \
            [[0] * ns + [int(j == i) for j in range(nt)] for i in range(nt)]
    images = linalg.mat_mul(block, split)  # images of S+T basis, in L coords
    P = []
    for i in range(n):
        e = [int(j == i) for j in range(n)]
        c = linalg.solve_in_rowspace(split, e)  # e in S+T rational coords
        img = [sum(ci * Fraction(images[k][j]) for k, ci in enumerate(c))
               for j in range(n)]
        if any(a.denominator != 1 for a in img):
            raise ValueError("extension is not integral on the overlattice")
        P.append([int(a) for a in img])
    return Isometry(L, P)


def basis_solver(basis):
    """Integer pseudo-inverse (R, d) of a full-row-rank basis matrix.

    For any row v in the row space, v R / d gives its basis coordinates;
    callers must verify membership by multiplying back.
    """
    Bt = linalg.transpose(basis)
    Minv = linalg.inverse(linalg.mat_mul(basis, Bt))
    R = linalg.mat_mul(linalg.mat_frac(Bt), Minv)
    d = 1
    for row in R:
        for a in row:
            d = d * a.denominator // math.gcd(d, a.denominator)
    Rint = [[int(a * d) for a in row] for row in R]
    return Rint, d


def isometry_from_ambient_map(lattice, basis, ambient_map, solver=None):
    """Isometry of a coordinate-model lattice from a map of the ambient.

    basis holds the lattice's basis as integer coordinate rows; ambient_map
    is a matrix acting on coordinates by x -> x A. The restriction must be
    integral on the lattice, else ValueError.
    """
    images = linalg.mat_mul(basis, ambient_map)
    if solver is None:
        solver = basis_solver(basis)
    Rint, d = solver
    P = []
    for row in images:
        num = linalg.vec_mat(row, Rint)
        if any(a % d for a in num):
            raise ValueError("ambient map does not preserve the lattice")
        P.append([a // d for a in num])
    if linalg.mat_mul(P, basis) != images:
        raise ValueError("ambient map does not preserve the lattice")
    return Isometry(lattice, P)


def restrict_isometry(isometry, sub):
    """Restrict an isometry to a stable sublattice (as its own lattice)."""
    if sub.ambient is not isometry.lattice:
        raise ValueError("sublattice does not live in the isometry's lattice")
    images = linalg.mat_mul(sub.coords, isometry.matrix)
    P = []
    for row in images:
        x = linalg.solve_in_rowspace(sub.coords, row)
        if x is None or any(c.denominator != 1 for c in x):
            raise ValueError("sublattice is not stable under the isometry")
        P.append([int(c) for c in x])
    return Isometry(sub, P)


def glue_translation_isometry(frame, word):
    """The holy-construction isometry induced by a glue-code word.

    Acts on each A_n copy by the cyclic coordinate rotation matching the
    word's letter there; sends the frame vector h_w to h_{w+t}.
    """
    word = tuple(int(a) % (frame.n + 1) for a in word)
    if word not in frame.code_set:
        raise ValueError(f"word {word} is not in the glue code")
    size = frame.n + 1
    dim = size * frame.m
    A = [[0] * dim for _ in range(dim)]
    for j, t in enumerate(word):
        for k in range(size):
            A[j * size + k][j * size + (k + t) % size] = 1
    return isometry_from_ambient_map(frame.leech, frame.basis, A,
                                     solver=frame.solver)


def find_isometry(L1, L2, node_cap=2_000_000):
    """Search for an isometry between definite lattices of equal rank.

    Backtracks over images of the basis among short vectors; returns the
    transformation matrix (rows: images of L1's basis in L2's basis) or
    None. Meant for small ranks.
    """
    if L1.rank != L2.rank or L1.det() != L2.det():
        return None
    n = L1.rank
    norms_needed = [L1.gram[i][i] for i in range(n)]
    bound = max(abs(q) for q in norms_needed)
    cands = {}
    vecs = enumeration.short_vectors(L2, bound)
    for q in set(norms_needed):
        cands[q] = [v.coords for v in vecs if v.norm() == q]
    chosen = []
    nodes = 0

    def pairing_ok(x):
        i = len(chosen)
        return all(linalg.dot(x, chosen[j], L2.gram) == L1.gram[i][j]
                   for j in range(i))

    def dfs():
        nonlocal nodes
        i = len(chosen)
        if i == n:
            return True
        for x in cands[L1.gram[i][i]]:
            nodes += 1
            if nodes > node_cap:
                raise RuntimeError("isometry search budget exceeded")
            if pairing_ok(x):
                chosen.append(x)
                if dfs():
                    return True
                chosen.pop()
        return False

    try:
        found = dfs()
    except RuntimeError:
        return None
    if not found:
        return None
    T = [row[:] for row in chosen]
    if abs(linalg.det(T)) != 1:
        return None
    return T
