"""Exact integer and rational matrix algebra.

Matrices are lists of row lists with Python int entries (Fraction where
stated); vectors are plain lists. Everything is arbitrary precision and
nothing here touches floating point. Functions never mutate their inputs.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def copy_mat(M):
    return [row[:] for row in M]


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    """Matrix product; works for int and Fraction entries alike."""
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vec_mat(v, M):
    if not M:
        return []
    return [sum(a * b for a, b in zip(v, col)) for col in zip(*M)]


def mat_vec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def dot(u, v, G=None):
    """u.v, or u G v^T when a Gram matrix is supplied."""
    if G is None:
        return sum(a * b for a, b in zip(u, v))
    return sum(u[i] * sum(G[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))


def is_symmetric(M):
    return all(M[i][j] == M[j][i] for i in range(len(M)) for j in range(i))


def det(M):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = copy_mat(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf(M):
    """Row Hermite normal form.

    Returns (H, U) with H = U * M, U unimodular, pivots positive and
    entries above each pivot reduced into [0, pivot). Zero rows sink to
    the bottom. The output is canonical for the row span of M.
    """
    H = copy_mat(M)
    rows = len(H)
    cols = len(H[0]) if rows else 0
    U = identity(rows)
    r = 0
    for c in range(cols):
        # Euclidean elimination below the pivot row.
        while True:
            piv, best = None, None
            for i in range(r, rows):
                if H[i][c] != 0 and (best is None or abs(H[i][c]) < best):
                    piv, best = i, abs(H[i][c])
            if piv is None:
                break
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, rows):
                if H[i][c] != 0:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c] != 0:
                        done = False
            if done:
                break
        if r < rows and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
            if r == rows:
                break
    return H, U


def row_rank(M):
    H, _ = hnf(M)
    return sum(1 for row in H if any(row))


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_span(rows):
    """HNF basis of the integer row span, built by incremental insertion.

    Returns only the nonzero canonical rows (no transform); suited to
    spans with many more generators than rank.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = {}  # column -> row with its first nonzero entry there
    for row in rows:
        row = list(row)
        while True:
            col = next((c for c in range(ncols) if row[c]), None)
            if col is None:
                break
            if col not in pivots:
                if row[col] < 0:
                    row = [-a for a in row]
                pivots[col] = row
                break
            p = pivots[col]
            g, u, v = _xgcd(p[col], row[col])
            pc, rc = p[col] // g, row[col] // g
            combined = [u * a + v * b for a, b in zip(p, row)]
            row = [pc * b - rc * a for a, b in zip(p, row)]
            pivots[col] = combined
    cols = sorted(pivots)
    basis = [pivots[c] for c in cols]
    # reduce entries above each pivot into [0, pivot)
    for i, c in enumerate(cols):
        piv = basis[i][c]
        for j in range(i):
            q = basis[j][c] // piv
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return basis


def kernel_basis(M):
    """Basis of the saturated left kernel {x : x M = 0}, HNF-canonical."""
    H, U = hnf(M)
    ker = [U[i] for i in range(len(H)) if not any(H[i])]
    if not ker:
        return []
    K, _ = hnf(ker)
    return [row for row in K if any(row)]


def snf(M):
    """Smith normal form.

    Returns (D, U, V) with D = U * M * V diagonal, nonnegative, and
    d1 | d2 | ... ; U and V are unimodular.
    """
    D = copy_mat(M)
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in D:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(rows, cols):
        # Move a minimal nonzero entry of the trailing block to (t, t).
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] != 0 and (best is None or abs(D[i][j]) < best):
                    piv, best = (i, j), abs(D[i][j])
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # Clear the pivot row and column; restart if a remainder survives.
        dirty = False
        for i in range(t + 1, rows):
            if D[i][t] != 0:
                q = D[i][t] // D[t][t]
                row_op(i, t, q)
                if D[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if D[t][j] != 0:
                q = D[t][j] // D[t][t]
                col_op(j, t, q)
                if D[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Enforce divisibility of the remaining block by the pivot.
        stop = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t] != 0:
                    row_op(t, i, -1)
                    stop = False
                    break
            if not stop:
                break
        if stop:
            if D[t][t] < 0:
                D[t] = [-a for a in D[t]]
                U[t] = [-a for a in U[t]]
            t += 1
    return D, U, V


def mat_frac(M):
    return [[Fraction(a) for a in row] for row in M]


def is_integral(M):
    return all(Fraction(a).denominator == 1 for row in M for a in row)


def frac_to_int(M):
    return [[int(a) for a in row] for row in M]


def inverse(M):
    """Inverse of a square matrix, as a Fraction matrix."""
    n = len(M)
    A = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [a * inv for a in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


def solve_in_rowspace(B, v):
    """Coefficients x with x B = v, or None if v is outside the row span.

    B need not be square; if its rows are dependent an arbitrary valid
    solution is returned. Entries of the result are Fractions.
    """
    k = len(B)
    if k == 0:
        return [] if not any(v) else None
    n = len(B[0])
    # Gaussian elimination on the transposed augmented system.
    A = [[Fraction(B[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(n):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = A[i][k]
    for i in range(r, n):
        if A[i][k] != 0:
            return None
    return x


def congruent_diagonal(G):
    """Diagonal of a rational congruent diagonalization of symmetric G.

    Returns Fractions d_i with P G P^T = diag(d_i) for some rational P;
    the signs of the d_i give the signature by Sylvester's law.
    """
    n = len(G)
    A = [[Fraction(a) for a in row] for row in G]
    diag = []
    idx = list(range(n))
    for step in range(n):
        m = len(A)
        piv = next((i for i in range(m) if A[i][i] != 0), None)
        if piv is None:
            piv_pair = next(((i, j) for i in range(m) for j in range(i + 1, m)
                             if A[i][j] != 0), None)
            if piv_pair is None:
                diag.extend([Fraction(0)] * m)
                break
            i, j = piv_pair
            # x_i <- x_i + x_j makes the (i, i) entry 2 A[i][j] != 0.
            for c in range(m):
                A[i][c] += A[j][c]
            for r in range(m):
                A[r][i] += A[r][j]
            piv = i
        d = A[piv][piv]
        diag.append(d)
        rest = [r for r in range(m) if r != piv]
        A = [[A[r][c] - A[r][piv] * A[piv][c] / d for c in rest] for r in rest]
        if not A:
            break
    return diag


def gram_schmidt_from_gram(G):
    """Orthogonalization data (mu, B) of a basis given only its Gram matrix.

    mu[i][j] (j < i) are projection coefficients, B[i] the squared norms of
    the orthogonalized vectors, all Fractions. Requires positive definite G.
    """
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(G[i][j])
            for k in range(j):
                s -= mu[i][k] * mu[j][k] * B[k]
            if B[j] == 0:
                raise ValueError("degenerate Gram in orthogonalization")
            mu[i][j] = s / B[j]
        s = Fraction(G[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * B[k]
        B[i] = s
        if B[i] <= 0:
            raise ValueError("Gram is not positive definite")
    return mu, B


def lll_reduce(G, delta=Fraction(3, 4)):
    """LLL-reduce a definite Gram matrix.

    Returns (G2, T) with G2 = T^t G T, T unimodular and G2 LLL-reduced with
    parameter delta applied to |G|. Raises ValueError on indefinite input.
    """
    n = len(G)
    if n == 0:
        return [], []
    if not is_symmetric(G):
        raise ValueError("Gram matrix must be symmetric")
    signs = {0}
    for d in congruent_diagonal(G):
        signs.add(1 if d > 0 else -1 if d < 0 else 0)
    if 1 in signs and -1 in signs:
        raise ValueError("LLL requires definite form")
    neg = -1 in signs
    W = [[-a for a in row] for row in G] if neg else copy_mat(G)

    R = identity(n)  # rows of R = current basis in the original basis
    mu, B = gram_schmidt_from_gram(W)

    def size_reduce(k, j):
        if abs(mu[k][j]) * 2 > 1:
            r = round(mu[k][j])
            R[k] = [a - r * b for a, b in zip(R[k], R[j])]
            for l in range(j):
                mu[k][l] -= r * mu[j][l]
            mu[k][j] -= r

    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            size_reduce(k, j)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            R[k], R[k - 1] = R[k - 1], R[k]
            m = mu[k][k - 1]
            Bnew = B[k] + m * m * B[k - 1]
            mu_new = m * B[k - 1] / Bnew
            B[k] = B[k - 1] * B[k] / Bnew
            B[k - 1] = Bnew
            for j in range(k - 1):
                mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu_new * mu[i][k]
            mu[k][k - 1] = mu_new
            k = max(k - 1, 1)
    G2 = mat_mul(mat_mul(R, G), transpose(R))
    return G2, transpose(R)
