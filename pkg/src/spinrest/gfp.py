"""Dense exact linear algebra over the prime field GF(p).

Matrices are numpy int64 arrays with entries reduced to [0, p); elimination
is plain Gauss-Jordan with vectorized row updates.  Subspaces carry a
canonical reduced-echelon basis, so equality is matrix equality.
"""

from dataclasses import dataclass, field

import numpy as np

from .partitions import _is_prime


def _check_prime(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p


def rref(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, over GF(p)."""
    a = np.mod(np.asarray(arr, dtype=np.int64), p)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def rank(arr: np.ndarray, p: int) -> int:
    """Rank over GF(p): plain forward elimination, switching to blocked
    Schur-complement elimination for large matrices."""
    a = np.mod(np.asarray(arr, dtype=np.int64), p)
    if min(a.shape) >= 256:
        return _rank_blocked(a, p)
    return _rank_plain(a, p)


def _rank_plain(a: np.ndarray, p: int) -> int:
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def _inv_mod(mat: np.ndarray, p: int) -> np.ndarray:
    k = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(k, dtype=np.int64)], axis=1)
    red, pivots = rref(aug, p)
    if pivots[:k] != list(range(k)):
        raise ValueError("matrix is singular")
    return red[:, k:]


def _rank_blocked(a: np.ndarray, p: int, panel: int = 64) -> int:
    """Blocked elimination: find pivots inside a narrow column panel with
    scalar elimination, then Schur-complement the trailing columns in one
    BLAS-backed multiply per panel."""
    a = a.copy()
    m, n = a.shape
    top = 0
    c0 = 0
    while c0 < n and top < m:
        c1 = min(c0 + panel, n)
        work = a[top:, c0:c1].copy()
        mm = work.shape[0]
        perm = np.arange(mm)
        piv_cols: list[int] = []
        r = 0
        for c in range(c1 - c0):
            if r >= mm:
                break
            nz = np.nonzero(work[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                work[[r, piv]] = work[[piv, r]]
                perm[[r, piv]] = perm[[piv, r]]
            work[r] = work[r] * pow(int(work[r, c]), -1, p) % p
            below = r + 1 + np.nonzero(work[r + 1 :, c])[0]
            if below.size:
                work[below] = (work[below] - np.outer(work[below, c], work[r])) % p
            piv_cols.append(c0 + c)
            r += 1
        k = r
        if k:
            a[top:] = a[top:][perm]
            if c1 < n:
                a11 = a[top : top + k][:, piv_cols]
                coeff = matmul_mod(a[top + k :, piv_cols], _inv_mod(a11, p), p)
                update = matmul_mod(coeff, a[top : top + k, c1:], p)
                a[top + k :, c1:] = (a[top + k :, c1:] - update) % p
            top += k
        c0 = c1
    return top


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact a @ b mod p; goes through float64 BLAS while the inner products
    stay below 2^53."""
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    b = np.mod(np.asarray(b, dtype=np.int64), p)
    if a.shape[-1] * (p - 1) * (p - 1) < 2**53:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return np.mod(np.rint(prod).astype(np.int64), p)
    return np.mod(a.astype(object) @ b.astype(object), p).astype(np.int64)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^ambient with a canonical RREF basis (rows)."""

    ambient: int
    basis: np.ndarray
    p: int
    pivots: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        piv = []
        for row in self.basis:
            nz = np.nonzero(row)[0]
            piv.append(int(nz[0]))
        object.__setattr__(self, "pivots", tuple(piv))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.p == other.p
            and np.array_equal(self.basis, other.basis)
        )

    def reduce_rows(self, rows: np.ndarray) -> np.ndarray:
        """Residues of the given row vectors modulo the subspace."""
        x = np.mod(np.asarray(rows, dtype=np.int64), self.p)
        if self.dim == 0:
            return x
        return (x - matmul_mod(x[:, list(self.pivots)], self.basis, self.p)) % self.p

    def contains(self, vec) -> bool:
        return not np.any(self.reduce_rows(np.asarray(vec, dtype=np.int64)[None, :]))


def subspace_from_rows(rows, ambient: int, p: int) -> Subspace:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        return Subspace(ambient, np.zeros((0, ambient), dtype=np.int64), p)
    basis, _ = rref(arr, p)
    return Subspace(ambient, basis, p)


def kernel(arr: np.ndarray, p: int) -> Subspace:
    """Right kernel {v : arr v = 0} as a canonical Subspace."""
    a = np.asarray(arr, dtype=np.int64)
    rows, cols = a.shape
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return Subspace(cols, np.zeros((0, cols), dtype=np.int64), p)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, fc]) % p
    basis, _ = rref(basis, p)
    return Subspace(cols, basis, p)


def solve(arr: np.ndarray, b, p: int) -> np.ndarray | None:
    """One solution of arr x = b over GF(p), or None if inconsistent."""
    a = np.mod(np.asarray(arr, dtype=np.int64), p)
    rhs = np.mod(np.asarray(b, dtype=np.int64), p)
    if rhs.ndim != 1 or rhs.shape[0] != a.shape[0]:
        raise ValueError("right-hand side has wrong length")
    aug = np.concatenate([a, rhs[:, None]], axis=1)
    red, pivots = rref(aug, p)
    if a.shape[1] in pivots:
        return None
    x = np.zeros(a.shape[1], dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = red[r, a.shape[1]]
    return x


class GFpMatrix:
    """An exact matrix over GF(p)."""

    def __init__(self, entries, p: int):
        _check_prime(p)
        self.p = p
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be 2-dimensional")
        self.array = np.mod(arr, p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    @classmethod
    def identity(cls, n: int, p: int) -> "GFpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    def __matmul__(self, other: "GFpMatrix") -> "GFpMatrix":
        if self.p != other.p:
            raise ValueError("mixed characteristics")
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        return GFpMatrix(matmul_mod(self.array, other.array, self.p), self.p)

    def __sub__(self, other: "GFpMatrix") -> "GFpMatrix":
        return GFpMatrix((self.array - other.array) % self.p, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFpMatrix)
            and self.p == other.p
            and np.array_equal(self.array, other.array)
        )

    def is_zero(self) -> bool:
        return not np.any(self.array)

    def rank(self) -> int:
        return rank(self.array, self.p)

    def kernel(self) -> Subspace:
        return kernel(self.array, self.p)

    def solve(self, b) -> np.ndarray | None:
        return solve(self.array, b, self.p)


def fixed_space(mats, dim: int, p: int) -> Subspace:
    """Common fixed vectors of the given square matrices: the intersection of
    kernel(G - I); the full space when no generators are given."""
    mats = list(mats)
    if not mats:
        return Subspace(dim, np.eye(dim, dtype=np.int64), p)
    blocks = []
    for g in mats:
        g = np.mod(np.asarray(g, dtype=np.int64), p)
        if g.shape != (dim, dim):
            raise ValueError(f"generator shape {g.shape} != ({dim}, {dim})")
        blocks.append((g - np.eye(dim, dtype=np.int64)) % p)
    return kernel(np.concatenate(blocks, axis=0), p)


def quotient_action(g: np.ndarray, w: Subspace) -> np.ndarray:
    """Matrix induced by g on ambient/W in the coordinates of W's non-pivot
    columns; raises if g does not stabilize W."""
    p, n = w.p, w.ambient
    g = np.mod(np.asarray(g, dtype=np.int64), p)
    if g.shape != (n, n):
        raise ValueError(f"generator shape {g.shape} != ({n}, {n})")
    if w.dim == n:
        return np.zeros((0, 0), dtype=np.int64)
    if w.dim:
        image = matmul_mod(g, w.basis.T, p).T  # rows are g * basis vectors
        if np.any(w.reduce_rows(image)):
            raise ValueError("subspace is not stable under the generator")
    pivots = list(w.pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    gq = g[np.ix_(free, free)].copy()
    if w.dim:
        gq = (gq - matmul_mod(w.basis[:, free].T, g[np.ix_(pivots, free)], p)) % p
    return gq


def quotient_projection(w: Subspace) -> np.ndarray:
    """The projection ambient -> ambient/W, rows indexed by quotient coords."""
    n = w.ambient
    pivots = list(w.pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    proj = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        proj[k, fc] = 1
    if w.dim:
        proj[:, pivots] = (-w.basis[:, free].T) % w.p
    return proj
