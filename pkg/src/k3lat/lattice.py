"""Lattices as integer Gram matrices, with sublattice coordinates.

A Lattice is a free Z-module with a symmetric integer bilinear form given
on a fixed basis. A sublattice remembers its ambient lattice and the
coordinate matrix of its basis inside it; saturation, orthogonal
complements and divisibility are computed exactly from those data.
"""

import math

from . import linalg


class Lattice:
    """Integer Gram matrix, optionally sitting inside an ambient lattice."""

    def __init__(self, gram, name=None, ambient=None, coords=None,
                 allow_degenerate=False):
        gram = [list(map(int, row)) for row in gram]
        if not linalg.is_symmetric(gram):
            raise ValueError("Gram matrix must be symmetric")
        if (ambient is None) != (coords is None):
            raise ValueError("ambient and coords must be supplied together")
        if coords is not None:
            coords = [list(map(int, row)) for row in coords]
            if len(coords) != len(gram):
                raise ValueError("coordinate rows must match the rank")
            expected = linalg.mat_mul(linalg.mat_mul(coords, ambient.gram),
                                      linalg.transpose(coords))
            if expected != gram:
                raise ValueError("Gram does not match coordinates in ambient")
        self.gram = gram
        self.name = name
        self.ambient = ambient
        self.coords = coords
        self._det = linalg.det(gram)
        self.degenerate = self._det == 0 and self.rank > 0
        if self.degenerate and not allow_degenerate:
            raise ValueError("degenerate form (pass allow_degenerate to allow)")

    # -- basic invariants ---------------------------------------------------

    @property
    def rank(self):
        return len(self.gram)

    def det(self):
        return self._det

    def signature(self):
        """(n_plus, n_minus) by exact congruence diagonalization."""
        if self.degenerate:
            raise ValueError("signature of a degenerate lattice")
        diag = linalg.congruent_diagonal(self.gram)
        plus = sum(1 for d in diag if d > 0)
        minus = sum(1 for d in diag if d < 0)
        return plus, minus

    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_definite(self):
        if self.rank == 0:
            return True
        plus, minus = self.signature()
        return plus == 0 or minus == 0

    def is_unimodular(self):
        return abs(self._det) == 1

    # -- constructions ------------------------------------------------------

    def rescale(self, k):
        if k == 0:
            raise ValueError("rescaling by zero")
        name = None
        if self.name:
            name = f"{self.name}({k})" if k != 1 else self.name
        return Lattice([[k * a for a in row] for row in self.gram], name=name,
                       allow_degenerate=True)

    def direct_sum(self, other):
        n, m = self.rank, other.rank
        gram = linalg.zeros(n + m, n + m)
        for i in range(n):
            for j in range(n):
                gram[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                gram[n + i][n + j] = other.gram[i][j]
        name = None
        if self.name and other.name:
            name = f"{self.name}+{other.name}"
        return Lattice(gram, name=name, allow_degenerate=True)

    def __add__(self, other):
        return self.direct_sum(other)

    def vector(self, coords):
        return LatticeVector(self, coords)

    def basis_vectors(self):
        n = self.rank
        return [self.vector([int(i == j) for j in range(n)]) for i in range(n)]

    def sublattice(self, vectors, name=None):
        """Sublattice spanned by the given vectors (must be independent)."""
        rows = [v.coords if isinstance(v, LatticeVector) else list(v)
                for v in vectors]
        if rows and linalg.row_rank(rows) != len(rows):
            ker = linalg.kernel_basis(linalg.transpose(rows))
            raise ValueError(f"dependent vectors, e.g. relation {ker[0]}")
        gram = linalg.mat_mul(linalg.mat_mul(rows, self.gram),
                              linalg.transpose(rows))
        return Lattice(gram, name=name, ambient=self, coords=rows,
                       allow_degenerate=True)

    def saturation(self, name=None):
        """Primitive closure inside the ambient lattice (HNF-canonical)."""
        if self.ambient is None:
            raise ValueError("saturation needs an ambient lattice")
        C = self.coords
        n = self.ambient.rank
        if not C:
            return self.ambient.sublattice([], name=name)
        # x is in the rational row span of C iff x kills the right kernel.
        K = linalg.kernel_basis(linalg.transpose(C))
        if K:
            sat = linalg.kernel_basis(linalg.transpose(K))
        else:
            sat, _ = linalg.hnf(linalg.identity(n))
        sat = [row for row in sat if any(row)]
        return self.ambient.sublattice(sat, name=name)

    def orthogonal_complement(self, name=None):
        """{x in ambient : (x, s) = 0 for all s}, a primitive sublattice."""
        if self.ambient is None:
            raise ValueError("orthogonal complement needs an ambient lattice")
        pairing = linalg.mat_mul(self.ambient.gram, linalg.transpose(self.coords))
        ker = linalg.kernel_basis(pairing)
        return self.ambient.sublattice(ker, name=name)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        obj = {"name": self.name or "", "gram": [row[:] for row in self.gram]}
        if self.ambient is not None:
            obj["ambient"] = self.ambient.name or ""
            obj["coords"] = [row[:] for row in self.coords]
        return obj

    @classmethod
    def from_json(cls, obj, ambient=None):
        name = obj.get("name") or None
        if "coords" in obj:
            if ambient is None:
                raise ValueError("lattice record references an ambient lattice")
            return cls(obj["gram"], name=name, ambient=ambient,
                       coords=obj["coords"], allow_degenerate=True)
        return cls(obj["gram"], name=name, allow_degenerate=True)

    def __repr__(self):
        label = self.name or "lattice"
        return f"<{label} rank {self.rank} det {self._det}>"


class LatticeVector:
    """Integer coordinate row in the basis of a fixed lattice."""

    def __init__(self, lattice, coords):
        coords = list(map(int, coords))
        if len(coords) != lattice.rank:
            raise ValueError("coordinate length does not match rank")
        self.lattice = lattice
        self.coords = coords

    def is_zero(self):
        return not any(self.coords)

    def norm(self):
        return linalg.dot(self.coords, self.coords, self.lattice.gram)

    def dot(self, other):
        if other.lattice is not self.lattice:
            raise ValueError("vectors live in different lattices")
        return linalg.dot(self.coords, other.coords, self.lattice.gram)

    def divisibility(self):
        """Positive generator of the pairing ideal (v, L)."""
        if self.is_zero():
            raise ValueError("divisibility of the zero vector")
        pairings = linalg.mat_vec(self.lattice.gram, self.coords)
        return math.gcd(*pairings) if len(pairings) > 1 else abs(pairings[0])

    def is_primitive(self):
        return math.gcd(*self.coords) == 1 if len(self.coords) > 1 \
            else abs(self.coords[0]) == 1

    def to_ambient(self):
        """The same vector as an element of the ambient lattice."""
        if self.lattice.ambient is None:
            raise ValueError("vector's lattice has no ambient")
        return LatticeVector(self.lattice.ambient,
                             linalg.vec_mat(self.coords, self.lattice.coords))

    def __neg__(self):
        return LatticeVector(self.lattice, [-a for a in self.coords])

    def __add__(self, other):
        return LatticeVector(self.lattice,
                             [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return LatticeVector(self.lattice,
                             [a - b for a, b in zip(self.coords, other.coords)])

    def __repr__(self):
        return f"<vector {self.coords} of {self.lattice!r}>"
