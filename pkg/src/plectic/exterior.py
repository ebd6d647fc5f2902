"""Constant alternating forms on R^n with exact or float coefficients.

Evaluation follows the determinant convention (no 1/p! factor):
dx^{i_1...i_p}(v_1,...,v_p) = det [v_b[i_a]]_{a,b}.  Contraction inserts
the vector into the first slot: (ι_v a)(u_1,...,u_{p-1}) = a(v, u_1,...).
Coefficients are stored densely over increasing multi-indices in
lexicographic order; all values are immutable and operations are pure.
"""

from __future__ import annotations

from . import linalg
from .multiindex import MultiIndex, index_rank, index_tuples, sort_with_sign
from .scalars import EXACT, mode_of, normalize


class AltForm:
    """A constant alternating p-covector on R^n."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs=None):
        # degree > n is allowed and denotes the zero space (no multi-indices)
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        basis = index_tuples(n, degree)
        if coeffs is None:
            data = [0] * len(basis)
        elif isinstance(coeffs, dict):
            data = [0] * len(basis)
            ranks = index_rank(n, degree)
            for key, val in coeffs.items():
                idx = key.indices if isinstance(key, MultiIndex) else tuple(key)
                if idx not in ranks:
                    raise ValueError(f"bad multi-index {idx} for (n={n}, p={degree})")
                data[ranks[idx]] = normalize(val)
        else:
            data = [normalize(v) for v in coeffs]
            if len(data) != len(basis):
                raise ValueError(f"expected {len(basis)} coefficients, got {len(data)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(data))

    def __setattr__(self, name, value):
        raise AttributeError("AltForm is immutable")

    @classmethod
    def zero(cls, n: int, degree: int) -> "AltForm":
        return cls(n, degree)

    @classmethod
    def basis_form(cls, n: int, indices) -> "AltForm":
        """dx^I for an increasing index tuple I."""
        idx = tuple(indices)
        return cls(n, len(idx), {idx: 1})

    def coeff(self, indices):
        idx = indices.indices if isinstance(indices, MultiIndex) else tuple(indices)
        return self.coeffs[index_rank(self.n, self.degree)[idx]]

    def items(self):
        """(multi-index tuple, coefficient) pairs for nonzero coefficients, lex order."""
        basis = index_tuples(self.n, self.degree)
        return [(basis[i], c) for i, c in enumerate(self.coeffs) if c != 0]

    @property
    def mode(self) -> str:
        return mode_of(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, vectors):
        """a(v_1,...,v_p) by the determinant convention."""
        if len(vectors) != self.degree:
            raise ValueError(f"need {self.degree} vectors, got {len(vectors)}")
        for v in vectors:
            if len(v) != self.n:
                raise ValueError("vector dimension mismatch")
        exact = self.mode == EXACT and all(not isinstance(x, float) for v in vectors for x in v)
        det = linalg.det_exact if exact else _det_float
        total = 0
        basis = index_tuples(self.n, self.degree)
        for pos, c in enumerate(self.coeffs):
            if c == 0:
                continue
            I = basis[pos]
            total += c * det([[v[i - 1] for v in vectors] for i in I])
        return normalize(total)

    def __eq__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree == other.degree
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.n, self.degree, self.coeffs))

    def __add__(self, other):
        self._check_same_shape(other)
        return AltForm(self.n, self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return AltForm(self.n, self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return AltForm(self.n, self.degree, [-c for c in self.coeffs])

    def scale(self, s):
        return AltForm(self.n, self.degree, [s * c for c in self.coeffs])

    def __rmul__(self, s):
        return self.scale(s)

    def _check_same_shape(self, other):
        if not isinstance(other, AltForm):
            raise TypeError("expected AltForm")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __repr__(self):
        terms = ", ".join(f"{idx}: {c}" for idx, c in self.items()) or "0"
        return f"AltForm(n={self.n}, p={self.degree}, {{{terms}}})"


def _all_exact(rows):
    return all(not isinstance(x, float) for row in rows for x in row)


def _det_float(rows):
    if not rows:
        return 1.0
    import numpy as np

    return float(np.linalg.det(np.array(rows, dtype=float)))


def wedge(a: AltForm, b: AltForm) -> AltForm:
    """Exterior product; bilinear and graded-anticommutative."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    n = a.n
    p, q = a.degree, b.degree
    ranks = index_rank(n, p + q)
    out = [0] * len(index_tuples(n, p + q))
    for I, ca in a.items():
        for J, cb in b.items():
            merged, sign = sort_with_sign(I + J)
            if sign:
                out[ranks[merged]] += sign * ca * cb
    return AltForm(n, p + q, out)


def contract(v, a: AltForm) -> AltForm:
    """Interior product ι_v a, v in the first slot."""
    if a.degree < 1:
        raise ValueError("cannot contract a degree-0 form")
    if len(v) != a.n:
        raise ValueError("vector dimension mismatch")
    n, p = a.n, a.degree
    ranks = index_rank(n, p - 1)
    out = [0] * len(index_tuples(n, p - 1))
    for I, c in a.items():
        for pos, i in enumerate(I):
            vi = v[i - 1]
            if vi == 0:
                continue
            rest = I[:pos] + I[pos + 1 :]
            sign = -1 if pos % 2 else 1
            out[ranks[rest]] += sign * vi * c
    return AltForm(n, p - 1, out)


def multi_contract(vectors, a: AltForm) -> AltForm:
    """Iterated interior product, first vector contracted first."""
    if len(vectors) > a.degree:
        raise ValueError(f"cannot contract {len(vectors)} vectors into degree {a.degree}")
    out = a
    for v in vectors:
        out = contract(v, out)
    return out


def sharp_matrix(a: AltForm):
    """Columns: coefficients of ι_{e_j} a, j = 1..n (the v -> ι_v a map)."""
    cols = [contract(_basis_vector(a.n, j), a).coeffs for j in range(1, a.n + 1)]
    return [list(row) for row in zip(*cols)]


def sharp_rank(a: AltForm) -> int:
    """Rank of v -> ι_v a as a matrix over the multi-index basis."""
    if a.degree < 1:
        raise ValueError("sharp_rank needs degree >= 1")
    mat = sharp_matrix(a)
    if a.mode == EXACT:
        return linalg.rank_exact(mat)
    return linalg.rank_float(mat)


def is_nondegenerate(a: AltForm) -> bool:
    """v -> ι_v a injective, i.e. sharp_rank == n."""
    return sharp_rank(a) == a.n


def sharp_kernel(a: AltForm):
    """Basis of {v : ι_v a = 0} (degeneracy witnesses)."""
    mat = sharp_matrix(a)
    return linalg.kernel_basis(mat, a.n)


def pullback_linear(G, a: AltForm) -> AltForm:
    """(G*a)(v_1,...,v_p) = a(G v_1,..., G v_p) for an n×n matrix G.

    Computed coefficientwise: (G*a)[J] = Σ_I a[I] · det G[I, J].
    """
    n = a.n
    G = [list(row) for row in G]
    if len(G) != n or any(len(row) != n for row in G):
        raise ValueError(f"expected a {n}x{n} matrix")
    p = a.degree
    if p == 0:
        return a
    items = a.items()
    exact = a.mode == EXACT and _all_exact(G)
    det = linalg.det_exact if exact else _det_float
    out = []
    for J in index_tuples(n, p):
        cols = [j - 1 for j in J]
        total = 0
        for I, c in items:
            minor = [[G[i - 1][j] for j in cols] for i in I]
            total += c * det(minor)
        out.append(normalize(total))
    return AltForm(n, p, out)


def _basis_vector(n: int, i: int):
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def basis_vector(n: int, i: int):
    """e_i in R^n (1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return _basis_vector(n, i)
