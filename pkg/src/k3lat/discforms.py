"""Discriminant groups with their Q/2Z-valued quadratic forms.

Covers the finite quadratic form of an even lattice, the exact Milgram
signature via Gauss sums in cyclotomic integer rings, brute-force (anti-)
isometry of forms, the simplified existence/embedding/uniqueness criteria
for even lattices, 2-elementary invariants, and overlattice gluing.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .lattice import Lattice

MILGRAM_ORDER_CAP = 10 ** 6
ISOMORPHISM_ORDER_CAP = 10 ** 4
_SEARCH_NODE_CAP = 500_000


class FiniteQuadraticForm:
    """A finite abelian group with a quadratic form q: A -> Q/2Z.

    The group is presented by invariant factors d_1 | d_2 | ... | d_k
    (each > 1); q is stored on the generators as a symmetric rational
    matrix whose diagonal is read mod 2 and off-diagonal mod 1.
    """

    def __init__(self, factors, q_matrix):
        factors = [int(d) for d in factors]
        if any(d <= 1 for d in factors):
            raise ValueError("invariant factors must be > 1")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        k = len(factors)
        q = [[Fraction(q_matrix[i][j]) for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                if q[i][j] != q[j][i]:
                    raise ValueError("q matrix must be symmetric")
        for i in range(k):
            q[i][i] %= 2
            for j in range(k):
                if i != j:
                    q[i][j] %= 1
        self.factors = factors
        self.q = q
        # integer numerators over a common denominator, for fast loops
        den = 1
        for row in q:
            for a in row:
                den = den * a.denominator // math.gcd(den, a.denominator)
        self._den = den
        self._qnum = [[int(a * den) for a in row] for row in q]

    @property
    def length(self):
        return len(self.factors)

    def order(self):
        prod = 1
        for d in self.factors:
            prod *= d
        return prod

    def is_trivial(self):
        return not self.factors

    def elements(self):
        return itertools.product(*(range(d) for d in self.factors))

    def element_order(self, x):
        o = 1
        for xi, d in zip(x, self.factors):
            if xi:
                o = math.lcm(o, d // math.gcd(xi, d))
        return o

    def q_value(self, x):
        """q(x) as a Fraction in [0, 2)."""
        den = self._den
        qn = self._qnum
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = qn[i]
                total += xi * xi * row[i]
                for j in range(i + 1, len(x)):
                    total += 2 * xi * x[j] * row[j]
        return Fraction(total % (2 * den), den) if den else Fraction(0)

    def b_value(self, x, y):
        """Bilinear pairing b(x, y) as a Fraction in [0, 1)."""
        den = self._den
        qn = self._qnum
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = qn[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return Fraction(total % den, den) if den else Fraction(0)

    def neg(self):
        return FiniteQuadraticForm(self.factors,
                                   [[-a for a in row] for row in self.q])

    def value_multiset(self):
        counts = {}
        for x in self.elements():
            v = self.q_value(x)
            counts[v] = counts.get(v, 0) + 1
        return counts

    def to_json(self):
        return {"factors": self.factors[:],
                "q": [[[a.numerator, a.denominator] for a in row]
                      for row in self.q]}

    @classmethod
    def from_json(cls, obj):
        q = [[Fraction(num, den) for num, den in row] for row in obj["q"]]
        return cls(obj["factors"], q)

    @classmethod
    def trivial(cls):
        return cls([], [])

    def __repr__(self):
        return f"<finite quadratic form on {self.factors}>"


@dataclass
class DiscriminantData:
    """The finite form of a lattice plus coordinates on its group.

    gens[i] is a rational row (in the lattice basis) generating a cyclic
    factor of order form.factors[i] of A_L = L*/L.
    """

    lattice: Lattice
    form: "FiniteQuadraticForm"
    gens: list
    _V: list
    _keep: list

    def class_coords(self, x):
        """Coordinates in A_L of a dual vector x (rational row in L's basis).

        Raises if x is not in the dual lattice.
        """
        pairings = [sum(Fraction(a) * g for a, g in zip(x, col))
                    for col in zip(*self.lattice.gram)]
        if any(p.denominator != 1 for p in pairings):
            raise ValueError("vector is not in the dual lattice")
        y = linalg.vec_mat([int(p) for p in pairings], self._V)
        return tuple(y[i] % self.form.factors[j]
                     for j, i in enumerate(self._keep))


def discriminant_data(L):
    """DiscriminantData of an even nondegenerate lattice."""
    if L.degenerate:
        raise ValueError("discriminant form of a degenerate lattice")
    if not L.is_even():
        raise ValueError("discriminant form requires an even lattice")
    n = L.rank
    if n == 0:
        return DiscriminantData(L, FiniteQuadraticForm.trivial(), [], [], [])
    D, U_, V = linalg.snf(L.gram)
    # A_L = Z^n / Z^n G via pairing vectors; y -> yV diagonalizes to sum Z/d_i.
    GV = linalg.mat_mul(L.gram, V)
    X = linalg.inverse(GV)  # row i = dual generator of the i-th cyclic factor
    keep = [i for i in range(n) if D[i][i] > 1]
    gens = [X[i] for i in keep]
    factors = [D[i][i] for i in keep]
    q = [[sum(gi[a] * L.gram[a][b] * gj[b] for a in range(n) for b in range(n))
          for gj in gens] for gi in gens]
    return DiscriminantData(L, FiniteQuadraticForm(factors, q), gens, V, keep)


def discriminant_form(L):
    return discriminant_data(L).form


def discriminant_group_length(L):
    """Minimal number of generators of A_L (no evenness required)."""
    if L.degenerate:
        raise ValueError("discriminant group of a degenerate lattice")
    D, _, _ = linalg.snf(L.gram)
    return sum(1 for i in range(L.rank) if abs(D[i][i]) > 1)


# -- exact Gauss sums in Z[zeta_N] ------------------------------------------

def _cyclotomic_poly(n, _cache={}):
    """Coefficient list of the n-th cyclotomic polynomial (exact)."""
    if n in _cache:
        return _cache[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            phi_d = _cyclotomic_poly(d)
            poly = _poly_divide_exact(poly, phi_d)
    _cache[n] = poly
    return poly


def _poly_divide_exact(num, den):
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1]:
            raise ArithmeticError("inexact polynomial division")
        c //= den[-1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _poly_mod_cyclotomic(coeffs, n):
    """Reduce an exponent-vector of Z[x]/(x^n - 1) modulo Phi_n; [] iff zero."""
    phi = _cyclotomic_poly(n)
    deg = len(phi) - 1
    rem = coeffs[:]
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg + 1):
                rem[i - deg + j] -= c * phi[j]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _poly_mul_mod_xn(a, b, n):
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % n] += ai * bj
    return out


def milgram_signature(form, order_cap=MILGRAM_ORDER_CAP):
    """Signature mod 8 of a finite quadratic form, by exact Gauss sum.

    Computes sum_x exp(pi i q(x)) in a cyclotomic integer ring and matches
    it against sqrt(|A|) zeta_8^s for s = 0..7. No floating point.
    """
    if form.is_trivial():
        return 0
    size = form.order()
    if size > order_cap:
        raise ValueError(
            f"group order {size} exceeds the Milgram cap {order_cap}; "
            f"decompose into p-primary parts first")
    den = form._den or 1
    # squarefree part s of |A| decides which sqrt factors we need
    m, s = 1, size
    d = 2
    while d * d <= s:
        while s % (d * d) == 0:
            s //= d * d
            m *= d
        d += 1
    odd_primes = []
    rest = s if s % 2 else s // 2
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            odd_primes.append(p)
            rest //= p
        else:
            p += 2
    if rest > 1:
        odd_primes.append(rest)
    N = math.lcm(2 * den, 8, *odd_primes)
    # Gauss sum as an exponent vector over zeta_N
    S = [0] * N
    qn = form._qnum
    k = form.length
    for x in form.elements():
        total = 0
        for i in range(k):
            xi = x[i]
            if xi:
                row = qn[i]
                total += xi * xi * row[i]
                for j in range(i + 1, k):
                    total += 2 * xi * x[j] * row[j]
        a = total % (2 * den)
        S[a * N // (2 * den) % N] += 1
    # sqrt(|A|) = m * prod sqrt(p) over primes p | s, via quadratic Gauss sums
    root = [0] * N
    root[0] = m
    if s % 2 == 0:
        step = N // 8
        factor = [0] * N
        factor[step] = 1
        factor[-step] = 1  # zeta_8 + zeta_8^-1 = sqrt(2)
        root = _poly_mul_mod_xn(root, factor, N)
    for p in odd_primes:
        g = [0] * N
        for a in range(1, p):
            ls = pow(a, (p - 1) // 2, p)
            g[a * (N // p)] += 1 if ls == 1 else -1
        if p % 4 == 3:  # g = i sqrt(p); divide by i = zeta_8^2
            shift = [0] * N
            shift[-(N // 4)] = 1
            g = _poly_mul_mod_xn(g, shift, N)
        root = _poly_mul_mod_xn(root, g, N)
    for sigma in range(8):
        target = _poly_mul_mod_xn(root, _unit_vector(N, sigma * N // 8), N)
        diff = [a - b for a, b in zip(S, target)]
        if not _poly_mod_cyclotomic(diff, N):
            return sigma
    raise AssertionError("Gauss sum did not match any eighth root of unity")


def _unit_vector(n, k):
    v = [0] * n
    v[k % n] = 1
    return v


# -- isomorphism search ------------------------------------------------------

def _subgroup_order(form, gens):
    zero = tuple([0] * form.length)
    seen = {zero}
    queue = [zero]
    while queue:
        x = queue.pop()
        for g in gens:
            y = tuple((a + b) % d for a, b, d in zip(x, g, form.factors))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


def _find_generator_images(q1, q2, sign, node_cap=_SEARCH_NODE_CAP):
    """Images in q2 of q1's generators under a (sign=+1) isometry or
    (sign=-1) anti-isometry; None if none exists, or raises on cap."""
    if q1.factors != q2.factors:
        return None
    if q1.is_trivial():
        return []
    k = q1.length
    gens1 = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    targets_q = [(sign * q1.q_value(g)) % 2 for g in gens1]
    targets_b = [[(sign * q1.b_value(gens1[i], gens1[j])) % 1 for j in range(i)]
                 for i in range(k)]
    elements = list(q2.elements())
    by_profile = {}
    for x in elements:
        key = (q2.element_order(x), q2.q_value(x))
        by_profile.setdefault(key, []).append(x)
    p = q1.factors[0]
    elementary = all(d == p for d in q1.factors) and _is_prime(p)
    nodes = 0
    chosen = []
    echelon = []  # F_p row echelon of the chosen images, when elementary

    def reduces_to_zero(y):
        row = list(y)
        for piv, base in echelon:
            if row[piv]:
                c = row[piv] * pow(base[piv], -1, p) % p
                row = [(a - c * b) % p for a, b in zip(row, base)]
        return not any(row), row

    def dfs(i):
        nonlocal nodes
        if i == k:
            if elementary:
                return True  # independent images of a basis generate
            return _subgroup_order(q2, chosen) == q2.order()
        cands = by_profile.get((q1.factors[i], targets_q[i]), [])
        for y in cands:
            nodes += 1
            if nodes > node_cap:
                raise RuntimeError("search budget exceeded")
            if not all(q2.b_value(y, chosen[j]) == targets_b[i][j]
                       for j in range(i)):
                continue
            if elementary:
                dependent, reduced = reduces_to_zero(y)
                if dependent:
                    continue
                piv = next(idx for idx, a in enumerate(reduced) if a)
                echelon.append((piv, reduced))
            chosen.append(y)
            if dfs(i + 1):
                return True
            chosen.pop()
            if elementary:
                echelon.pop()
        return False

    if dfs(0):
        return [list(y) for y in chosen]
    return None


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def forms_isomorphic(q1, q2, order_cap=ISOMORPHISM_ORDER_CAP):
    """True/False, or None when the search is inconclusive.

    Prefiltered by invariant factors, Milgram signature and the multiset
    of q-values; then a generator-image backtracking search.
    """
    if q1.factors != q2.factors:
        return False
    if q1.order() > order_cap:
        return None
    if milgram_signature(q1) != milgram_signature(q2):
        return False
    if q1.value_multiset() != q2.value_multiset():
        return False
    try:
        images = _find_generator_images(q1, q2, +1)
    except RuntimeError:
        return None
    return images is not None


def find_anti_isometry(q1, q2, order_cap=ISOMORPHISM_ORDER_CAP):
    """A full anti-isometry gamma: q1 -> q2 as generator images, or None."""
    if q1.factors != q2.factors or q1.order() > order_cap:
        return None
    try:
        return _find_generator_images(q1, q2, -1)
    except RuntimeError:
        return None


# -- Nikulin criteria ---------------------------------------------------------

@dataclass
class Verdict:
    status: str  # "yes" | "no" | "inconclusive" (or "unique" for uniqueness)
    reason: str = ""
    witness: dict = None

    def __bool__(self):
        return self.status in ("yes", "unique")


def nikulin_lattice_exists(sig, form):
    """Existence of an even lattice with the given signature and form.

    Applies the simplified hypotheses: signature congruence mod 8,
    nonnegativity, and rank >= length standing in for the existence of a
    form of that rank. Outside them the answer is inconclusive.
    """
    tp, tm = sig
    if tp < 0 or tm < 0:
        return Verdict("no", reason=f"negative signature component ({tp},{tm})")
    if tp + tm < form.length:
        # outside the lemma's hypotheses; Milgram may not even apply
        return Verdict("inconclusive",
                       reason=f"rank {tp + tm} below length {form.length}")
    sigma = milgram_signature(form)
    if (tp - tm) % 8 != sigma:
        return Verdict("no", reason=f"signature {tp - tm} is not {sigma} mod 8")
    return Verdict("yes")


def nikulin_embedding_exists(S, target_sig):
    """Can S embed primitively into an even unimodular lattice of this
    signature? Decided through the complement's invariants."""
    if not S.is_even():
        raise ValueError("embedding criterion requires an even lattice")
    sp, sm = S.signature() if S.rank else (0, 0)
    lp, lm = target_sig
    mp, mm = lp - sp, lm - sm
    if mp < 0 or mm < 0:
        return Verdict("no", reason=f"signature ({sp},{sm}) exceeds ({lp},{lm})")
    q = discriminant_form(S).neg()
    sub = nikulin_lattice_exists((mp, mm), q)
    if sub.status == "yes":
        return Verdict("yes", witness={
            "complement_signature": (mp, mm),
            "complement_factors": q.factors,
            "complement_form": q.to_json(),
        })
    return Verdict(sub.status, reason=sub.reason)


def nikulin_unique(sig, form):
    """Uniqueness in the genus: indefinite and rank >= 2 + length."""
    tp, tm = sig
    if tp <= 0 or tm <= 0:
        return Verdict("inconclusive", reason="form is not indefinite")
    if tp + tm >= 2 + form.length:
        return Verdict("unique")
    return Verdict("inconclusive", reason="rank below 2 + length")


def two_modular_invariants(L):
    """(rank, signature, length, Delta) of a 2-elementary lattice."""
    form = discriminant_form(L)
    if any(d != 2 for d in form.factors):
        raise ValueError("discriminant group is not 2-elementary")
    delta = 0
    for x in form.elements():
        if form.q_value(x) not in (Fraction(0), Fraction(1)):
            delta = 1
            break
    return L.rank, L.signature(), form.length, delta


# -- overlattice gluing -------------------------------------------------------

@dataclass
class GlueMap:
    """An anti-isometry between subgroups of two discriminant groups,
    given by generators of the domain and their images."""

    domain: list
    images: list

    @classmethod
    def full(cls, qS, qT, order_cap=ISOMORPHISM_ORDER_CAP):
        """The glue map of a full anti-isometry A_S -> A_T, if one exists."""
        images = find_anti_isometry(qS, qT, order_cap=order_cap)
        if images is None:
            return None
        k = qS.length
        return cls([[int(i == j) for j in range(k)] for i in range(k)], images)


@dataclass
class Gluing:
    """An overlattice of S + T with both factors embedded primitively."""

    lattice: Lattice
    s_sub: Lattice
    t_sub: Lattice
    index: int


def glue_overlattice(S, T, glue, name=None):
    """Overlattice of S + T generated by lifts of the glue graph.

    The glue map must be an anti-isometry between subgroups of A_S and
    A_T; lifts use the canonical dual-basis representatives. Returns a
    Gluing with S and T as primitive sublattices of the result.
    """
    dS = discriminant_data(S)
    dT = discriminant_data(T)
    qS, gensS = dS.form, dS.gens
    qT, gensT = dT.form, dT.gens
    # walk the glued subgroup, checking well-definedness and anti-isometry
    zero = (tuple([0] * qS.length), tuple([0] * qT.length))
    seen = {zero[0]: zero[1]}
    frontier = [zero]
    pairs = [(tuple(d), tuple(i)) for d, i in zip(glue.domain, glue.images)]
    while frontier:
        x, y = frontier.pop()
        for d, i in pairs:
            nx = tuple((a + b) % f for a, b, f in zip(x, d, qS.factors))
            ny = tuple((a + b) % f for a, b, f in zip(y, i, qT.factors))
            if nx in seen:
                if seen[nx] != ny:
                    raise ValueError(f"glue map is not well defined at {nx}")
                continue
            seen[nx] = ny
            frontier.append((nx, ny))
    for x, y in seen.items():
        if (qS.q_value(x) + qT.q_value(y)) % 2 != 0:
            raise ValueError(f"glue is not an anti-isometry at element {x}: "
                             f"q_S = {qS.q_value(x)}, q_T = {qT.q_value(y)}")
    if len({y for y in seen.values()}) != len(seen):
        raise ValueError("glue map is not injective")
    index = len(seen)

    ns, nt = S.rank, T.rank
    amb = S + T
    rows = [[Fraction(int(i == j)) for j in range(ns + nt)]
            for i in range(ns + nt)]
    for d, i in pairs:
        lift_s = [sum(Fraction(c) * gensS[a][b] for a, c in enumerate(d))
                  for b in range(ns)]
        lift_t = [sum(Fraction(c) * gensT[a][b] for a, c in enumerate(i))
                  for b in range(nt)]
        rows.append(lift_s + lift_t)
    den = 1
    for row in rows:
        for a in row:
            den = den * a.denominator // math.gcd(den, a.denominator)
    int_rows = [[int(a * den) for a in row] for row in rows]
    H, _ = linalg.hnf(int_rows)
    basis = [row for row in H if any(row)][:ns + nt]
    coords = [[Fraction(a, den) for a in row] for row in basis]
    gram = linalg.mat_mul(linalg.mat_mul(coords, linalg.mat_frac(amb.gram)),
                          linalg.transpose(coords))
    if not linalg.is_integral(gram):
        raise ValueError("glue lifts do not pair integrally")
    gram = linalg.frac_to_int(gram)
    L = Lattice(gram, name=name)
    if not L.is_even():
        raise ValueError("glued overlattice is not even")
    # embed S and T as sublattices of the result
    def embed(offset, rank):
        emb = []
        for i in range(rank):
            target = [Fraction(int(j == offset + i)) for j in range(ns + nt)]
            x = linalg.solve_in_rowspace(coords, target)
            if x is None or any(c.denominator != 1 for c in x):
                raise AssertionError("factor does not embed integrally")
            emb.append([int(c) for c in x])
        return emb

    s_sub = L.sublattice(embed(0, ns), name=S.name)
    t_sub = L.sublattice(embed(ns, nt), name=T.name)
    return Gluing(lattice=L, s_sub=s_sub, t_sub=t_sub, index=index)
