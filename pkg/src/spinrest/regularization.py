"""Ladders and the regularization map onto restricted p-strict partitions.

A node (r, c) sits on the ladder through column c + (r-1)p.  Ladders of
columns with residue 0 come in fused pairs: the two columns mp and mp+1
interleave into a single ladder (the unique reading that makes ladders
partition the quadrant).  Regularization slides each ladder's nodes as far
left (= down the ladder) as they can go.
"""

from dataclasses import dataclass

from .labels import alpha_n
from .partitions import (
    Partition,
    a_0,
    a_p,
    check_odd_prime,
    check_partition,
    is_p_strict,
    is_restricted_p_strict,
    is_strict,
    part_counts,
)
from .residues import Node, residue_of_column


@dataclass(frozen=True)
class Ladder:
    index: int
    nodes: tuple[Node, ...]  # sorted by ascending column


def ladder_index(node: Node, p: int) -> int:
    """Canonical ladder id of a node; fused residue-0 ladders use id mp+1."""
    r, c = node
    s = c + (r - 1) * p
    if residue_of_column(s, p) == 0 and s % p == 0:
        return s + 1
    return s


def ladder(s: int, p: int, bound: int | None = None) -> Ladder:
    """The ladder through column s (fused pair for residue 0); rows are
    truncated at `bound` when given."""
    check_odd_prime(p)
    if s < 1:
        raise ValueError("s must be >= 1")
    if residue_of_column(s, p) == 0:
        m = s // p  # s = mp or mp + 1
        nodes = [(r, m * p - (r - 1) * p) for r in range(1, m + 1)]
        nodes += [(r, m * p + 1 - (r - 1) * p) for r in range(1, m + 2)]
        canonical = m * p + 1
    else:
        top = -(-s // p)  # ceil(s / p)
        nodes = [(r, s - (r - 1) * p) for r in range(1, top + 1)]
        canonical = s
    if bound is not None:
        nodes = [nd for nd in nodes if nd[0] <= bound]
    nodes.sort(key=lambda nd: nd[1])
    return Ladder(canonical, tuple(nodes))


def ladder_counts(lam: Partition, p: int) -> dict[int, int]:
    """Node count of lam on each (canonical) ladder."""
    counts: dict[int, int] = {}
    for r, row_len in enumerate(lam, start=1):
        for c in range(1, row_len + 1):
            idx = ladder_index((r, c), p)
            counts[idx] = counts.get(idx, 0) + 1
    return counts


def regularize(lam: Partition, p: int) -> Partition:
    """Slide nodes along their ladders to the smallest columns; lands in RP_p
    and fixes RP_p pointwise."""
    check_odd_prime(p)
    lam = check_partition(lam)
    if not is_p_strict(lam, p):
        raise ValueError(f"{lam} is not {p}-strict")
    row_lens: dict[int, int] = {}
    for idx, count in ladder_counts(lam, p).items():
        for r, _c in ladder(idx, p).nodes[:count]:
            row_lens[r] = row_lens.get(r, 0) + 1
    out = tuple(row_lens.get(r, 0) for r in range(1, max(row_lens, default=0) + 1))
    out = check_partition(out)
    if not is_restricted_p_strict(out, p):
        raise RuntimeError(f"regularization of {lam} gave {out}, not restricted {p}-strict")
    return out


def reg_closed_form(lam: Partition, p: int) -> Partition:
    """lam^Reg = sum of alpha_(lam_r) (part-wise) for well-separated strict lam:
    requires lam_r - lam_(r+1) >= p + [p | lam_r] for all r < h."""
    check_odd_prime(p)
    if not is_strict(lam):
        raise ValueError(f"need a strict partition, got {lam}")
    for r in range(len(lam) - 1):
        if lam[r] - lam[r + 1] < p + (1 if lam[r] % p == 0 else 0):
            raise ValueError(f"{lam} violates the gap hypothesis at row {r + 1}")
    rows: list[int] = []
    for part in lam:
        al = alpha_n(part, p)
        for i, x in enumerate(al):
            if i < len(rows):
                rows[i] += x
            else:
                rows.append(x)
    return check_partition(rows)


def leading_coefficient(lam: Partition, p: int) -> int:
    """2^((h_p(lam) + a_0(lam) - a_p(lam^Reg))/2): the multiplicity of
    D(lam^Reg) at the top of the reduction of S(lam) mod p."""
    if not is_strict(lam):
        raise ValueError(f"need a strict partition, got {lam}")
    _, h_p, _ = part_counts(lam, p)
    exponent2 = h_p + a_0(lam) - a_p(regularize(lam, p), p)
    if exponent2 % 2 or exponent2 < 0:
        raise RuntimeError(
            f"leading coefficient exponent {exponent2}/2 for {lam}, p={p} is not a nonnegative integer"
        )
    return 2 ** (exponent2 // 2)
