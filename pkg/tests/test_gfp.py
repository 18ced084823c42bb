import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spinrest.gfp import (
    GFpMatrix,
    _inv_mod,
    _rank_plain,
    fixed_space,
    kernel,
    matmul_mod,
    quotient_action,
    quotient_projection,
    rank,
    rref,
    solve,
    subspace_from_rows,
)
from spinrest.specht import closure, from_cycles, permutation_matrix, subset_basis


def test_rank_basics():
    assert rank(np.eye(7, dtype=np.int64), 5) == 7
    assert rank(np.zeros((4, 9), dtype=np.int64), 3) == 0
    assert kernel(np.zeros((4, 9), dtype=np.int64), 3).dim == 9


def test_subset_incidence_rank_anchor():
    """The 6x4 incidence matrix of 1-subsets against 2-subsets of a 4-set has
    rank 4 over GF(3)."""
    from spinrest.specht import eta

    assert eta(1, 2, 4, 3).rank() == 4


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=1, max_value=30),
    st.sampled_from([3, 5, 7]),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_rank_nullity(m, n, p, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, (m, n))
    assert rank(a, p) + kernel(a, p).dim == n


def test_rank_nullity_large_blocked():
    rng = np.random.default_rng(7)
    for p in (3, 5, 7):
        a = rng.integers(0, p, (400, 380))
        r = rank(a, p)
        assert r == _rank_plain(a % p, p)
        assert r + kernel(a, p).dim == 380


def test_kernel_vectors_annihilate():
    rng = np.random.default_rng(1)
    for p in (3, 5):
        a = rng.integers(0, p, (12, 20))
        ker = kernel(a, p)
        assert not np.any(matmul_mod(a, ker.basis.T, p))


def test_solve():
    a = np.array([[1, 2], [0, 1], [1, 0]])
    x = solve(a, np.array([2, 2, 1]), 3)
    assert x is not None and np.array_equal(matmul_mod(a, x[:, None], 3).ravel(), [2, 2, 1])
    assert solve(np.array([[1, 1], [1, 1]]), np.array([1, 2]), 3) is None


def test_inv_mod():
    rng = np.random.default_rng(2)
    for p in (3, 7):
        while True:
            a = rng.integers(0, p, (6, 6))
            if rank(a, p) == 6:
                break
        inv = _inv_mod(a, p)
        assert np.array_equal(matmul_mod(a, inv, p), np.eye(6, dtype=np.int64))


def test_fixed_space_of_cycle_is_constants():
    n, p = 6, 5
    cyc = from_cycles(n, tuple(range(n)))
    basis = subset_basis(n, 1)
    mat = permutation_matrix(cyc, basis)
    fs = fixed_space([mat], n, p)
    assert fs.dim == 1
    assert fs.contains([1] * n)


def test_fixed_space_no_generators_is_everything():
    assert fixed_space([], 5, 3).dim == 5


def test_fixed_space_generator_independence():
    """Order of generators and generators-vs-whole-group give the same fixed
    space, on groups of order <= 48 via closure."""
    n, p = 4, 3
    basis = subset_basis(n, 2)
    gens = [from_cycles(n, (0, 1)), from_cycles(n, (0, 1, 2, 3))]
    group = closure(gens)
    assert len(group) == 24
    mats = [permutation_matrix(g, basis) for g in gens]
    dim = len(basis)
    a = fixed_space(mats, dim, p)
    b = fixed_space(mats[::-1], dim, p)
    c = fixed_space([permutation_matrix(g, basis) for g in sorted(group)], dim, p)
    assert a == b == c


def _random_stable_pair(rng, n, k, p):
    """A subspace W of dim k and a matrix G with G W <= W."""
    while True:
        w = subspace_from_rows(rng.integers(0, p, (k, n)), n, p)
        if w.dim == k:
            break
    pivots = list(w.pivots)
    free = [c for c in range(n) if c not in pivots]
    cols = np.zeros((n, n), dtype=np.int64)
    cols[:, :k] = w.basis.T
    for j, f in enumerate(free):
        cols[f, k + j] = 1
    block = np.zeros((n, n), dtype=np.int64)
    block[:k, :k] = rng.integers(0, p, (k, k))
    block[:k, k:] = rng.integers(0, p, (k, n - k))
    block[k:, k:] = rng.integers(0, p, (n - k, n - k))
    g = matmul_mod(matmul_mod(cols, block, p), _inv_mod(cols, p), p)
    return g, w


def test_quotient_action_commutes_with_projection():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        k = int(rng.integers(0, n + 1))
        p = int(rng.choice([3, 5, 7]))
        g, w = _random_stable_pair(rng, n, k, p)
        q = quotient_action(g, w)
        proj = quotient_projection(w)
        assert np.array_equal(matmul_mod(q, proj, p), matmul_mod(proj, g, p))


def test_quotient_action_trivial_cases():
    p = 5
    g = np.arange(9).reshape(3, 3) % p
    zero = subspace_from_rows(np.zeros((0, 3), dtype=np.int64), 3, p)
    assert np.array_equal(quotient_action(g, zero), g % p)
    full = subspace_from_rows(np.eye(3, dtype=np.int64), 3, p)
    assert quotient_action(g, full).shape == (0, 0)


def test_quotient_action_rejects_unstable():
    p = 3
    w = subspace_from_rows(np.array([[1, 0, 0]]), 3, p)
    g = from_cycles(3, (0, 1))
    mat = np.zeros((3, 3), dtype=np.int64)
    for j in range(3):
        mat[g[j], j] = 1
    with pytest.raises(ValueError):
        quotient_action(mat, w)


def test_gfp_matrix_ops():
    a = GFpMatrix([[1, 2], [3, 4]], 5)
    b = GFpMatrix([[0, 1], [1, 0]], 5)
    assert (a @ b).array.tolist() == [[2, 1], [4, 3]]
    assert (a - a).is_zero()
    assert GFpMatrix.identity(3, 5).rank() == 3


def test_rref_is_canonical():
    p = 5
    a = np.array([[2, 4, 1], [1, 2, 0]])
    red, pivots = rref(a, p)
    assert pivots == [0, 2]
    # pivot columns are unit vectors
    for r, c in enumerate(pivots):
        col = red[:, c]
        assert col[r] == 1 and np.count_nonzero(col) == 1
