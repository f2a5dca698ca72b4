"""Exact linear algebra over the integers.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
everything here is exact at arbitrary precision.  The two workhorses are
Bareiss elimination (ranks, determinants) and a Smith normal form with
tracked unimodular transforms, on which basis extension, saturation, kernels
and cokernels are built.  Intended for desk-scale inputs (ranks up to about
a dozen); there is deliberately no modular or sparse acceleration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def freeze_vector(v) -> Vec:
    return tuple(int(x) for x in v)


def freeze_matrix(rows) -> Mat:
    return tuple(freeze_vector(r) for r in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def dot(u: Vec, v: Vec) -> int:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of vectors of length {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def negate(v: Vec) -> Vec:
    return tuple(-x for x in v)


def mat_vec(A: Mat, v: Vec) -> Vec:
    """A @ v with v a column vector."""
    return tuple(dot(row, v) for row in A)


def vec_mat(v: Vec, A: Mat) -> Vec:
    """v @ A with v a row vector."""
    if len(v) != len(A):
        raise DimensionMismatch(f"row vector of length {len(v)} times {len(A)}-row matrix")
    ncols = len(A[0]) if A else 0
    return tuple(sum(v[i] * A[i][j] for i in range(len(v))) for j in range(ncols))


def mat_mul(A: Mat, B: Mat) -> Mat:
    return tuple(vec_mat(row, B) for row in A)


def transpose(A: Mat, ncols: int | None = None) -> Mat:
    """Transpose; `ncols` disambiguates the shape of a 0-row matrix."""
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(row[j] for row in A) for j in range(len(A[0])))


def _check_rectangular(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch("matrix rows of unequal length")
    return ncols


def rank_of(vs) -> int:
    """Rank over the rationals of a multiset of integer vectors.

    Fraction-free Bareiss elimination: all intermediate entries stay integral.
    """
    M = [list(map(int, v)) for v in vs]
    ncols = _check_rectangular(M)
    row = 0
    piv = 1
    for col in range(ncols):
        sel = next((i for i in range(row, len(M)) if M[i][col] != 0), None)
        if sel is None:
            continue
        M[row], M[sel] = M[sel], M[row]
        for i in range(row + 1, len(M)):
            for j in range(col + 1, ncols):
                M[i][j] = (M[i][j] * M[row][col] - M[i][col] * M[row][j]) // piv
            M[i][col] = 0
        piv = M[row][col]
        row += 1
        if row == len(M):
            break
    return row


def is_linearly_independent(vs) -> bool:
    """True iff the multiset is R-linearly independent (repeats always fail)."""
    vs = list(vs)
    return rank_of(vs) == len(vs)


def determinant(A: Mat) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    M = [list(map(int, row)) for row in A]
    n = _check_rectangular(M)
    if len(M) != n:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    piv = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if sel is None:
                return 0
            M[k], M[sel] = M[sel], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // piv
            M[i][k] = 0
        piv = M[k][k]
    return sign * M[n - 1][n - 1]


class _SnfState:
    """Mutable D = U @ A @ V with the four transforms tracked as lists."""

    def __init__(self, A: Mat, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.D = [list(row) for row in A]
        self.U = [list(r) for r in identity(nrows)]
        self.Uinv = [list(r) for r in identity(nrows)]
        self.V = [list(r) for r in identity(ncols)]
        self.Vinv = [list(r) for r in identity(ncols)]

    # Each elementary operation updates D together with U (and the inverse
    # column operation on Uinv) or V (and the inverse row operation on Vinv),
    # preserving U @ A @ V == D, U @ Uinv == I, V @ Vinv == I.

    def row_swap(self, i: int, j: int) -> None:
        self.D[i], self.D[j] = self.D[j], self.D[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]
        for r in self.Uinv:
            r[i], r[j] = r[j], r[i]

    def row_negate(self, i: int) -> None:
        self.D[i] = [-x for x in self.D[i]]
        self.U[i] = [-x for x in self.U[i]]
        for r in self.Uinv:
            r[i] = -r[i]

    def row_addmul(self, i: int, j: int, q: int) -> None:
        """row_i += q * row_j"""
        self.D[i] = [a + q * b for a, b in zip(self.D[i], self.D[j])]
        self.U[i] = [a + q * b for a, b in zip(self.U[i], self.U[j])]
        for r in self.Uinv:
            r[j] -= q * r[i]

    def col_swap(self, i: int, j: int) -> None:
        for r in self.D:
            r[i], r[j] = r[j], r[i]
        for r in self.V:
            r[i], r[j] = r[j], r[i]
        self.Vinv[i], self.Vinv[j] = self.Vinv[j], self.Vinv[i]

    def col_negate(self, j: int) -> None:
        for r in self.D:
            r[j] = -r[j]
        for r in self.V:
            r[j] = -r[j]
        self.Vinv[j] = [-x for x in self.Vinv[j]]

    def col_addmul(self, j: int, k: int, q: int) -> None:
        """col_j += q * col_k"""
        for r in self.D:
            r[j] += q * r[k]
        for r in self.V:
            r[j] += q * r[k]
        self.Vinv[k] = [a - q * b for a, b in zip(self.Vinv[k], self.Vinv[j])]


def _snf(A: Mat, nrows: int, ncols: int) -> tuple[Mat, Mat, Mat, Mat, Mat]:
    """Return (U, D, V, Uinv, Vinv) with U @ A @ V == D in Smith normal form.

    Deterministic: the pivot is the minimal-absolute-value nonzero entry of
    the remaining block, ties broken in row-major order.
    """
    s = _SnfState(A, nrows, ncols)
    D = s.D

    def clear(t: int) -> None:
        # Zero out column t below and row t right of the pivot; whenever a
        # remainder survives it is strictly smaller than the pivot, so
        # swapping it up makes progress.
        while True:
            for i in range(t + 1, nrows):
                if D[i][t]:
                    s.row_addmul(i, t, -(D[i][t] // D[t][t]))
            rem = next((i for i in range(t + 1, nrows) if D[i][t]), None)
            if rem is not None:
                s.row_swap(t, rem)
                continue
            for j in range(t + 1, ncols):
                if D[t][j]:
                    s.col_addmul(j, t, -(D[t][j] // D[t][t]))
            rem = next((j for j in range(t + 1, ncols) if D[t][j]), None)
            if rem is not None:
                s.col_swap(t, rem)
                continue
            return

    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                a = D[i][j]
                if a and (best is None or abs(a) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            s.row_swap(t, best[0])
        if best[1] != t:
            s.col_swap(t, best[1])
        while True:
            clear(t)
            piv = D[t][t]
            viol = next(
                (i for i in range(t + 1, nrows)
                 if any(D[i][j] % piv for j in range(t + 1, ncols))),
                None,
            )
            if viol is None:
                break
            # Pull a non-divisible entry into row t; the next clear() shrinks
            # the pivot, so this terminates.
            s.row_addmul(t, viol, 1)
        if D[t][t] < 0:
            s.row_negate(t)

    frz = freeze_matrix
    return frz(s.U), frz(s.D), frz(s.V), frz(s.Uinv), frz(s.Vinv)


def smith_normal_form(A) -> tuple[Mat, Mat, Mat]:
    """Smith normal form: (U, D, V) with U @ A @ V == D.

    U and V are unimodular and D is diagonal with nonnegative entries in a
    divisibility chain d1 | d2 | ...; the output is deterministic.
    """
    A = freeze_matrix(A)
    nrows = len(A)
    ncols = _check_rectangular([list(r) for r in A])
    U, D, V, _, _ = _snf(A, nrows, ncols)
    return U, D, V


def invariant_factors(A) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form, in chain order."""
    _, D, _ = smith_normal_form(A)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i])


def extends_to_Z_basis(vs, ambient_rank: int) -> bool:
    """True iff the multiset of vectors is part of a Z-basis of Z^ambient_rank."""
    vs = freeze_matrix(vs)
    for v in vs:
        if len(v) != ambient_rank:
            raise DimensionMismatch(
                f"vector of length {len(v)} in a rank-{ambient_rank} lattice")
    if len(set(vs)) != len(vs) or len(vs) > ambient_rank:
        return False
    facs = invariant_factors(vs)
    return len(facs) == len(vs) and all(d == 1 for d in facs)


def saturation_with_extension(vs, ncols: int | None = None) -> tuple[Mat, Mat]:
    """Basis of the saturation of the row span, plus its extension.

    Returns (B, Bext) where the rows of B are a Z-basis of
    span_Q(vs) ∩ Z^n and Bext is a unimodular matrix whose first len(B)
    rows are B.  `ncols` is required when vs is empty.
    """
    vs = freeze_matrix(vs)
    if vs:
        n = _check_rectangular([list(r) for r in vs])
    elif ncols is None:
        raise DimensionMismatch("ambient rank needed for an empty generating set")
    else:
        n = ncols
    if ncols is not None and vs and n != ncols:
        raise DimensionMismatch("ambient rank disagrees with vector length")
    _, D, _, _, Vinv = _snf(vs, len(vs), n)
    r = sum(1 for i in range(min(len(vs), n)) if D[i][i])
    return Vinv[:r], Vinv


def saturate(vs, ncols: int | None = None) -> Mat:
    """Z-basis of the saturated sublattice (span_Q(vs) ∩ Z^n)."""
    return saturation_with_extension(vs, ncols)[0]


def kernel_basis(A, ncols: int) -> Mat:
    """Basis of {x in Z^ncols : A @ x = 0}; the basis spans a saturated lattice."""
    A = freeze_matrix(A)
    for row in A:
        if len(row) != ncols:
            raise DimensionMismatch("kernel of a matrix with inconsistent row length")
    _, D, V, _, _ = _snf(A, len(A), ncols)
    r = sum(1 for i in range(min(len(A), ncols)) if D[i][i])
    return tuple(tuple(V[i][j] for i in range(ncols)) for j in range(r, ncols))


def solve_left(B, g, ncols: int | None = None) -> Vec | None:
    """One integer solution x of x @ B == g, or None if none exists."""
    B = freeze_matrix(B)
    g = freeze_vector(g)
    if B:
        n = _check_rectangular([list(r) for r in B])
    else:
        n = len(g) if ncols is None else ncols
    if len(g) != n:
        raise DimensionMismatch("right-hand side has the wrong length")
    m = len(B)
    U, D, V, _, _ = _snf(B, m, n)
    z = vec_mat(g, V)
    r = sum(1 for i in range(min(m, n)) if D[i][i])
    if any(z[j] for j in range(r, n)):
        return None
    y = [0] * m
    for i in range(r):
        if z[i] % D[i][i]:
            return None
        y[i] = z[i] // D[i][i]
    return vec_mat(tuple(y), U)


def unimodular_inverse(M: Mat) -> Mat:
    """Exact inverse of a unimodular integer matrix."""
    M = freeze_matrix(M)
    n = len(M)
    U, D, V, _, _ = _snf(M, n, n)
    if any(D[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # U M V = I  =>  M^{-1} = V U
    return mat_mul(V, U)


def vector_gcd(v: Vec) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group: free rank plus invariant factors.

    The torsion factors satisfy d1 | d2 | ... and every factor is >= 2.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and d % prev:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def cokernel_structure(A) -> FGAbelianGroup:
    """Structure of Z^rows / (column span of A)."""
    A = freeze_matrix(A)
    nrows = len(A)
    ncols = _check_rectangular([list(r) for r in A])
    _, D, _, _, _ = _snf(A, nrows, ncols)
    diag = [D[i][i] for i in range(min(nrows, ncols)) if D[i][i]]
    return FGAbelianGroup(free_rank=nrows - len(diag),
                          torsion=tuple(d for d in diag if d > 1))
