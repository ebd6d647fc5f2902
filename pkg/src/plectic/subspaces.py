"""Linear subspaces in canonical RREF bases, lattice ops, and the
orthogonality/isotropy predicates of multisymplectic linear algebra.

The reduced row-echelon basis is the canonical representative, so two
Subspace values are equal exactly when they describe the same subspace.
"""

from __future__ import annotations

import itertools

from . import linalg
from .exterior import AltForm, basis_vector, multi_contract
from .scalars import EXACT, FLOAT, RANK_TOL, mode_of


class Subspace:
    """A subspace of R^n; basis rows are the RREF canonical form."""

    __slots__ = ("n", "basis", "pivots", "mode")

    def __init__(self, n: int, rows, mode: str | None = None):
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise ValueError(f"row length {len(r)} != dimension {n}")
        if mode is None:
            mode = mode_of(x for r in rows for x in r) if rows else EXACT
        if mode == EXACT:
            rref_rows, pivots = linalg.rref(rows) if rows else ([], [])
        else:
            rref_rows, pivots = linalg.rref_float(rows) if rows else ([], [])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", tuple(rref_rows))
        object.__setattr__(self, "pivots", tuple(pivots))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, n: int, vectors) -> "Subspace":
        return cls(n, list(vectors))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, linalg.identity_matrix(n))

    @classmethod
    def coordinate_span(cls, n: int, indices) -> "Subspace":
        """span(e_i : i in indices), 1-based."""
        return cls(n, [basis_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v) -> bool:
        if len(v) != self.n:
            raise ValueError("vector dimension mismatch")
        residual = list(v)
        for row, piv in zip(self.basis, self.pivots):
            f = residual[piv]
            if f != 0:
                residual = [a - f * b for a, b in zip(residual, row)]
        if self.mode == FLOAT or any(isinstance(x, float) for x in v):
            bound = RANK_TOL * max(1.0, max(abs(float(x)) for x in v))
            return all(abs(x) <= bound for x in residual)
        return all(x == 0 for x in residual)

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.n, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Row-space intersection via the left kernel of [A^T | -B^T]."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.n)
        stacked = [
            list(row_a) + list(row_b)
            for row_a, row_b in zip(
                zip(*self.basis), zip(*[tuple(-x for x in r) for r in other.basis])
            )
        ]
        combos = linalg.kernel_basis(stacked, self.dim + other.dim)
        vectors = []
        for combo in combos:
            coeffs = combo[: self.dim]
            vec = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c != 0:
                    vec = [a + c * b for a, b in zip(vec, row)]
            vectors.append(tuple(vec))
        return Subspace(self.n, vectors)

    def complement(self) -> "Subspace":
        """Coordinate complement: span of e_i for the non-pivot columns."""
        missing = [i + 1 for i in range(self.n) if i not in self.pivots]
        return Subspace.coordinate_span(self.n, missing)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim}, basis={list(self.basis)})"

    def _check_ambient(self, other: "Subspace"):
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")


def complement_of(u: Subspace) -> Subspace:
    """Coordinate complement by RREF pivot completion."""
    return u.complement()


def orth_complement(omega: AltForm, u: Subspace, j: int) -> Subspace:
    """The j-th orthogonal complement of U with respect to omega.

    U^{⊥,j} = {v : contracting v together with any j vectors of U kills
    omega}; computed as the kernel of v -> (multi_contract over a basis of
    Λ^j U), stacked over the lexicographic j-subsets of the RREF basis.
    """
    k = omega.degree - 1
    if not 1 <= j <= k:
        raise ValueError(f"j={j} out of range 1..{k}")
    if omega.n != u.n:
        raise ValueError("ambient dimension mismatch")
    n = omega.n
    rows = []
    for subset in itertools.combinations(u.basis, j):
        # v -> multi_contract([v, *subset], omega); build its matrix by columns
        cols = []
        for i in range(1, n + 1):
            contracted = multi_contract([basis_vector(n, i)] + list(subset), omega)
            cols.append(contracted.coeffs)
        for row in zip(*cols):
            rows.append(list(row))
    if not rows:
        return Subspace.full(n)
    if omega.mode == FLOAT or u.mode == FLOAT:
        kern = linalg.kernel_basis_float([[float(x) for x in r] for r in rows], n)
    else:
        kern = linalg.kernel_basis(rows, n)
    return Subspace(n, kern)


def is_isotropic(omega: AltForm, u: Subspace, j: int) -> bool:
    """U ⊆ U^{⊥,j}."""
    return orth_complement(omega, u, j).contains(u)


def is_lagrangian(omega: AltForm, u: Subspace, j: int) -> bool:
    """U = U^{⊥,j} (RREF canonicity makes this a representation equality)."""
    return orth_complement(omega, u, j) == u
