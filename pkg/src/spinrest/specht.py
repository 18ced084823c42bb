"""Permutation modules on tabloids and k-subsets, Specht modules over GF(p),
invariants under wreath/Young subgroups, and the incidence maps between
k-subset bases.

Permutations are 0-indexed image tuples; all bases are ordered
lexicographically on their canonical encodings so matrices are reproducible.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np

from .gfp import GFpMatrix, Subspace, fixed_space, kernel, matmul_mod, quotient_action, rank
from .partitions import Partition, check_partition

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# Permutations and subgroup generating sets
# ---------------------------------------------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def from_cycles(n: int, *cycles) -> Perm:
    """Permutation of {0..n-1} from disjoint cycles (0-indexed)."""
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def compose(g: Perm, h: Perm) -> Perm:
    """g after h."""
    return tuple(g[h[i]] for i in range(len(g)))


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def perm_sign(g: Perm) -> int:
    seen = [False] * len(g)
    sign = 1
    for i in range(len(g)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def closure(gens: list[Perm]) -> set[Perm]:
    """Full group generated by gens (only sensible for small groups)."""
    if not gens:
        return set()
    n = len(gens[0])
    group = {identity_perm(n)}
    frontier = [identity_perm(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


@dataclass(frozen=True)
class SubgroupSpec:
    """A named subgroup of S_n.

    kind: 'young', 'alt_young' (blocks = composition of n), 'wreath',
    'wreath_alt' (blocks = (a, b) with ab = n), 'index2_wr_b2'
    (blocks = (variant, b), n = 2b), 'full_sym', 'full_alt', 'trivial'.
    """

    kind: str
    n: int
    blocks: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind in ("young", "alt_young"):
            if sum(self.blocks) != self.n or any(b <= 0 for b in self.blocks):
                raise ValueError(f"blocks {self.blocks} do not compose {self.n}")
        elif self.kind in ("wreath", "wreath_alt"):
            a, b = self.blocks
            if a < 2 or b < 2 or a * b != self.n:
                raise ValueError(f"wreath blocks {self.blocks} invalid for n={self.n}")
        elif self.kind == "index2_wr_b2":
            variant, b = self.blocks
            if variant not in (1, 2) or 2 * b != self.n:
                raise ValueError(f"index-2 spec {self.blocks} invalid for n={self.n}")
        elif self.kind not in ("full_sym", "full_alt", "trivial"):
            raise ValueError(f"unknown subgroup kind {self.kind}")

    def __str__(self) -> str:
        if self.kind == "young":
            return "S" + str(tuple(self.blocks))
        if self.kind == "alt_young":
            return "A" + str(tuple(self.blocks))
        if self.kind == "wreath":
            return f"W({self.blocks[0]},{self.blocks[1]})"
        if self.kind == "wreath_alt":
            return f"WA({self.blocks[0]},{self.blocks[1]})"
        if self.kind == "index2_wr_b2":
            return f"I2({self.blocks[0]},{self.blocks[1]})"
        return {"full_sym": "Sn", "full_alt": "An", "trivial": "1"}[self.kind]


def young(n: int, blocks) -> SubgroupSpec:
    return SubgroupSpec("young", n, tuple(blocks))


def alt_young(n: int, blocks) -> SubgroupSpec:
    return SubgroupSpec("alt_young", n, tuple(blocks))


def wreath(a: int, b: int) -> SubgroupSpec:
    return SubgroupSpec("wreath", a * b, (a, b))


def wreath_alt(a: int, b: int) -> SubgroupSpec:
    return SubgroupSpec("wreath_alt", a * b, (a, b))


def index2_wr_b2(variant: int, b: int) -> SubgroupSpec:
    return SubgroupSpec("index2_wr_b2", 2 * b, (variant, b))


def _young_generators(n: int, blocks) -> list[Perm]:
    gens = []
    start = 0
    for b in blocks:
        for i in range(start, start + b - 1):
            gens.append(from_cycles(n, (i, i + 1)))
        start += b
    return gens


def _alt_young_generators(n: int, blocks) -> list[Perm]:
    """Within-block 3-cycles plus one double transposition per adjacent pair
    of blocks of size >= 2; generates the even part of the Young subgroup."""
    gens = []
    starts = []
    start = 0
    for b in blocks:
        starts.append(start)
        for i in range(start, start + b - 2):
            gens.append(from_cycles(n, (i, i + 1, i + 2)))
        start += b
    big = [(s, b) for s, b in zip(starts, blocks) if b >= 2]
    for (s1, _), (s2, _) in zip(big, big[1:]):
        gens.append(from_cycles(n, (s1, s1 + 1), (s2, s2 + 1)))
    return gens


def _wreath_generators(a: int, b: int) -> list[Perm]:
    """S_a on the first block plus adjacent block swaps."""
    n = a * b
    gens = [from_cycles(n, (i, i + 1)) for i in range(a - 1)]
    for j in range(b - 1):
        gens.append(tuple(_block_swap_image(i, j, a, n) for i in range(n)))
    return gens


def _block_swap_image(i: int, j: int, a: int, n: int) -> int:
    lo, hi = j * a, (j + 1) * a
    if lo <= i < hi:
        return i + a
    if hi <= i < hi + a:
        return i - a
    return i


def _schreier_even_subgroup(gens: list[Perm], n: int) -> list[Perm]:
    """Generators of <gens> intersected with A_n via Schreier's lemma with
    transversal {1, t} for an odd generator t."""
    odd = [g for g in gens if perm_sign(g) < 0]
    if not odd:
        return list(gens)
    t = odd[0]
    t_inv = inverse(t)
    out = []
    for g in gens:
        if perm_sign(g) > 0:
            out.append(g)
            out.append(compose(t, compose(g, t_inv)))
        else:
            out.append(compose(g, t_inv))
            out.append(compose(t, g))
    ident = identity_perm(n)
    return [g for g in dict.fromkeys(out) if g != ident]


def generators(spec: SubgroupSpec) -> list[Perm]:
    """A generating set for the named subgroup."""
    n = spec.n
    if spec.kind == "trivial":
        return []
    if spec.kind == "full_sym":
        return _young_generators(n, (n,))
    if spec.kind == "full_alt":
        return _alt_young_generators(n, (n,))
    if spec.kind == "young":
        return _young_generators(n, spec.blocks)
    if spec.kind == "alt_young":
        return _alt_young_generators(n, spec.blocks)
    if spec.kind == "wreath":
        return _wreath_generators(*spec.blocks)
    if spec.kind == "wreath_alt":
        return _schreier_even_subgroup(_wreath_generators(*spec.blocks), n)
    # index2_wr_b2: A_b x A_b, the double transposition, and the block swap
    variant, b = spec.blocks
    gens = _alt_young_generators(n, (b, b))
    gens.append(from_cycles(n, (0, 1), (b, b + 1)))
    swap = tuple(_block_swap_image(i, 0, b, n) for i in range(n))
    if variant == 2:
        swap = compose(from_cycles(n, (0, 1)), swap)
    gens.append(swap)
    return gens


# ---------------------------------------------------------------------------
# Tabloid bases
# ---------------------------------------------------------------------------

Tabloid = tuple[tuple[int, ...], ...]  # rows 2..r, each sorted; row 1 implicit


@dataclass(frozen=True)
class PermBasis:
    """Ordered basis of tabloids of a given shape.

    For shape (n - k, k) the objects are the k-subsets of {0..n-1} (a tabloid
    is recovered from everything below row 1).
    """

    shape: Partition
    objects: tuple[Tabloid, ...]
    index: dict

    @property
    def n(self) -> int:
        return sum(self.shape)

    def __len__(self) -> int:
        return len(self.objects)


def shape_from_tail(n: int, tail) -> Partition:
    """The row sizes (n - |tail|, tail...) used for invariants M_{mu}, sorted
    into a partition (the permutation module only sees the size multiset)."""
    tail = check_partition(tail)
    first = n - sum(tail)
    if first < 0:
        raise ValueError(f"tail {tail} exceeds n = {n}")
    return check_partition(sorted((first,) + tail, reverse=True))


@lru_cache(maxsize=512)
def perm_basis(shape: Partition) -> PermBasis:
    """All tabloids of the given shape, ordered lexicographically."""
    shape = check_partition(shape)
    n = sum(shape)
    tail = shape[1:]
    objects: list[Tabloid] = []

    def fill(remaining: tuple[int, ...], rows_left: tuple[int, ...], acc: list):
        if not rows_left:
            objects.append(tuple(acc))
            return
        for row in combinations(remaining, rows_left[0]):
            acc.append(row)
            rest = tuple(x for x in remaining if x not in set(row))
            fill(rest, rows_left[1:], acc)
            acc.pop()

    fill(tuple(range(n)), tail, [])
    objects.sort()
    expected = factorial(n)
    for part in shape:
        expected //= factorial(part)
    if len(objects) != expected:
        raise RuntimeError(f"tabloid count mismatch for {shape}")
    return PermBasis(shape, tuple(objects), {t: i for i, t in enumerate(objects)})


def apply_to_tabloid(g: Perm, tab: Tabloid) -> Tabloid:
    return tuple(tuple(sorted(g[x] for x in row)) for row in tab)


def permutation_matrix(g: Perm, basis: PermBasis) -> np.ndarray:
    """0/1 matrix of g on the tabloid basis (columns are sent to rows)."""
    m = len(basis)
    mat = np.zeros((m, m), dtype=np.int64)
    for j, tab in enumerate(basis.objects):
        mat[basis.index[apply_to_tabloid(g, tab)], j] = 1
    return mat


def orbit_count(spec: SubgroupSpec, basis: PermBasis) -> int:
    """Number of orbits of the generated group on the basis objects; equals
    dim M^H in every characteristic."""
    gens = generators(spec)
    if not gens:
        return len(basis)
    seen = [False] * len(basis)
    orbits = 0
    for start in range(len(basis)):
        if seen[start]:
            continue
        orbits += 1
        stack = [basis.objects[start]]
        seen[start] = True
        while stack:
            tab = stack.pop()
            for g in gens:
                img = apply_to_tabloid(g, tab)
                idx = basis.index[img]
                if not seen[idx]:
                    seen[idx] = True
                    stack.append(img)
    return orbits


def orbit_basis(spec: SubgroupSpec, basis: PermBasis) -> np.ndarray:
    """Orbit indicator vectors: a basis of the fixed space of H on M^shape."""
    gens = generators(spec)
    labels = [-1] * len(basis)
    orbits = 0
    for start in range(len(basis)):
        if labels[start] >= 0:
            continue
        labels[start] = orbits
        stack = [basis.objects[start]]
        while stack:
            tab = stack.pop()
            for g in gens:
                idx = basis.index[apply_to_tabloid(g, tab)]
                if labels[idx] < 0:
                    labels[idx] = orbits
                    stack.append(basis.objects[idx])
        orbits += 1
    mat = np.zeros((orbits, len(basis)), dtype=np.int64)
    for idx, lab in enumerate(labels):
        mat[lab, idx] = 1
    return mat


# ---------------------------------------------------------------------------
# Standard tableaux and polytabloids
# ---------------------------------------------------------------------------


def hook_dimension(shape: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    shape = check_partition(shape)
    n = sum(shape)
    conj = [sum(1 for part in shape if part > c) for c in range(shape[0])] if shape else []
    denom = 1
    for r, part in enumerate(shape):
        for c in range(part):
            denom *= part - c + conj[c] - r - 1
    return factorial(n) // denom


def standard_tableaux(shape: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard tableaux (rows of entries 0..n-1 increasing along rows and
    columns), in lexicographic order of their row words."""
    shape = check_partition(shape)
    n = sum(shape)
    out = []

    def place(val: int, rows: list[list[int]]):
        if val == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(val)
                place(val + 1, rows)
                rows[r].pop()

    place(0, [[] for _ in shape])
    out.sort()
    if len(out) != hook_dimension(shape):
        raise RuntimeError(f"standard tableau count mismatch for {shape}")
    return out


def _tableau_tabloid(tableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in tableau[1:])


def _column_group(tableau) -> list[tuple[Perm, int]]:
    """(permutation of entries, sign) pairs of the column stabilizer."""
    cols = []
    height = len(tableau)
    for c in range(len(tableau[0])):
        col = [tableau[r][c] for r in range(height) if c < len(tableau[r])]
        cols.append(col)
    n_entries = sum(len(c) for c in cols)
    out = []

    def build(ci: int, mapping: dict, sign: int):
        if ci == len(cols):
            out.append((dict(mapping), sign))
            return
        col = cols[ci]
        for perm in permutations(range(len(col))):
            s = perm_sign(perm)
            for i, x in enumerate(col):
                mapping[x] = col[perm[i]]
            build(ci + 1, mapping, sign * s)
        for x in col:
            mapping.pop(x, None)

    build(0, {}, 1)
    return out


def polytabloid_matrix(shape: Partition, p: int) -> GFpMatrix:
    """Columns are the polytabloids of the standard tableaux, in the tabloid
    basis; the column space is the Specht module S^shape over GF(p)."""
    basis = perm_basis(check_partition(shape))
    tableaux = standard_tableaux(shape)
    mat = np.zeros((len(basis), len(tableaux)), dtype=np.int64)
    for j, t in enumerate(tableaux):
        for mapping, sign in _column_group(t):
            rows = tuple(tuple(sorted(mapping.get(x, x) for x in row)) for row in t[1:])
            mat[basis.index[rows], j] += sign
    return GFpMatrix(mat, p)


def specht_perp(shape: Partition, p: int) -> Subspace:
    """(S^shape)^perp in M^shape under the standard tabloid pairing: the
    kernel of the transposed polytabloid matrix.  For two-row shapes this is
    the radical Z_k with M_k / Z_k = S_k^*."""
    e = polytabloid_matrix(shape, p)
    return kernel(e.array.T, p)


def gram_irreducibility(shape: Partition, p: int) -> bool:
    """True iff the Gram matrix of the standard polytabloid basis is
    nonsingular mod p (then S^shape = D^shape is irreducible)."""
    e = polytabloid_matrix(shape, p).array
    gram = matmul_mod(e.T, e, p)
    return rank(gram, p) == gram.shape[0]


# ---------------------------------------------------------------------------
# Invariant dimensions
# ---------------------------------------------------------------------------


def dual_specht_invariant_dim(shape: Partition, p: int, spec: SubgroupSpec) -> int:
    """dim of the H-fixed vectors on the dual Specht module
    M^shape / (S^shape)^perp."""
    shape = check_partition(shape)
    basis = perm_basis(shape)
    w = specht_perp(shape, p)
    quotients = []
    for g in generators(spec):
        quotients.append(quotient_action(permutation_matrix(g, basis), w))
    qdim = len(basis) - w.dim
    return fixed_space(quotients, qdim, p).dim


def z_invariant_dim(k: int, n: int, p: int, spec: SubgroupSpec) -> tuple[int, int, bool]:
    """(dim Z_k^H, dim M_k^H, gap): Z_k = (S^(n-k,k))^perp; a strict gap means
    a nonzero H-invariant functional survives on the dual Specht quotient."""
    if 2 * k > n:
        raise ValueError("need k <= n/2")
    shape = check_partition((n - k, k))
    basis = perm_basis(shape)
    fixed = orbit_basis(spec, basis)  # rows span M_k^H
    e = polytabloid_matrix(shape, p).array
    # Z_k^H = fixed vectors annihilated by all polytabloid functionals
    dim_m_h = fixed.shape[0]
    dim_z_h = dim_m_h - rank(matmul_mod(fixed, e, p), p)
    return dim_z_h, dim_m_h, dim_z_h < dim_m_h


# ---------------------------------------------------------------------------
# Incidence maps between k-subset bases and Wilson's rank formula
# ---------------------------------------------------------------------------


def subset_basis(n: int, k: int) -> PermBasis:
    return perm_basis(check_partition((n - k, k)))


def eta(k: int, l: int, n: int, p: int) -> GFpMatrix:
    """The incidence map M_k -> M_l sending X to the sum of all l-subsets
    comparable with X (rows: l-subsets, columns: k-subsets)."""
    if not (0 <= k <= n // 2 and 0 <= l <= n // 2):
        raise ValueError("need k, l <= n/2")
    kb = perm_basis(check_partition((n - k, k)))
    lb = perm_basis(check_partition((n - l, l)))
    mat = np.zeros((len(lb), len(kb)), dtype=np.int64)
    for j, tab in enumerate(kb.objects):
        x = set(tab[0]) if tab else set()
        if l >= k:
            rest = [y for y in range(n) if y not in x]
            for extra in combinations(rest, l - k):
                y = tuple(sorted(x.union(extra)))
                mat[lb.index[(y,) if l else ()], j] += 1
        else:
            for sub in combinations(sorted(x), l):
                mat[lb.index[(sub,) if l else ()], j] += 1
    return GFpMatrix(mat, p)


def wilson_rank(k: int, l: int, n: int, p: int) -> int:
    """Closed-form rank of eta_{k,l} mod p: the sum of C(n,r) - C(n,r-1) over
    r <= k with C(l-r, k-r) not divisible by p."""
    if not (k <= l <= n // 2):
        raise ValueError("need k <= l <= n/2")
    total = 0
    for r in range(k + 1):
        if comb(l - r, k - r) % p != 0:
            total += comb(n, r) - (comb(n, r - 1) if r >= 1 else 0)
    return total


# ---------------------------------------------------------------------------
# The direct-summand identity for (n-6, 4, 2) / (n-6, 2^3)
# ---------------------------------------------------------------------------


def orbit_identity_check_inv42(b: int, p: int) -> int:
    """Evaluate dim (D^alpha)^W, W = W_{2,b}, as the alternating sum of orbit
    counts from the Young-module direct-sum identity; expected value 1.

    p = 3 uses alpha = (n-6, 4, 2) (needs 3 | b, b >= 6); p >= 5 uses
    alpha = (n-6, 2, 2, 2) (needs p | b, b >= 5).
    """
    n = 2 * b
    if b % p:
        raise ValueError("the identity needs p | b")
    w = wreath(2, b)
    if p == 3:
        if b < 6:
            raise ValueError("need b >= 6 for p = 3")
        plus = [(4, 2), (5,), (3, 1)]
        minus = [(5, 1), (3, 2), (4,)]
    else:
        if b < 5:
            raise ValueError("need b >= 5")
        plus = [(2, 2, 2), (3, 3), (4, 1, 1), (3, 1, 1), (3, 2), (2, 1, 1), (4,), (2, 1), (2, 1)]
        minus = [(3, 2, 1), (3, 2, 1), (4, 2), (2, 2, 1), (4, 1), (2, 2), (3, 1), (1, 1, 1), (3,)]
    total = 0
    for tail in plus:
        total += orbit_count(w, perm_basis(shape_from_tail(n, tail)))
    for tail in minus:
        total -= orbit_count(w, perm_basis(shape_from_tail(n, tail)))
    return total
