import pytest

from spinrest.labels import alpha_n
from spinrest.partitions import (
    is_restricted_p_strict,
    is_strict,
    p_strict_partitions,
    partitions_of,
)
from spinrest.regularization import (
    ladder,
    ladder_counts,
    ladder_index,
    leading_coefficient,
    reg_closed_form,
    regularize,
)


def test_ladder_examples():
    assert ladder(2, 3).nodes == ((1, 2),)
    assert set(ladder(5, 3).nodes) == {(2, 2), (1, 5)}
    # fused residue-0 pair: columns mp and mp+1 interleave
    assert set(ladder(3, 3).nodes) == {(1, 3), (1, 4), (2, 1)}
    assert ladder(3, 3) == ladder(4, 3)


def test_ladders_partition_the_quadrant():
    for p in (3, 5):
        bound = 12
        seen = {}
        for r in range(1, bound + 1):
            for c in range(1, bound + 1):
                idx = ladder_index((r, c), p)
                nodes = ladder(idx, p)
                assert (r, c) in nodes.nodes
                seen.setdefault(idx, set()).add((r, c))
        ids = sorted(seen)
        for a in ids:
            for b in ids:
                if a != b:
                    assert not set(ladder(a, p).nodes) & set(ladder(b, p).nodes)


def test_regularize_known_value():
    assert regularize((11, 2, 1), 5) == (7, 6, 1)


def test_regularize_fixes_restricted_labels():
    for p in (3, 5):
        for n in range(0, 18):
            for lam in p_strict_partitions(n, p):
                reg = regularize(lam, p)
                assert is_restricted_p_strict(reg, p)
                assert regularize(reg, p) == reg
                assert ladder_counts(reg, p) == ladder_counts(lam, p)
                if is_restricted_p_strict(lam, p):
                    assert reg == lam


def test_closed_form_examples():
    assert reg_closed_form((7, 3), 3) == (5, 4, 1)
    # alpha_10 at p = 5 is (5,4,1) (10 = 5*2 takes the divisible branch), so
    # the sum with alpha_4 = (4) is (9,4,1); cross-checked by regularize below
    assert reg_closed_form((10, 4), 5) == (9, 4, 1)
    assert regularize((10, 4), 5) == (9, 4, 1)
    assert reg_closed_form((9,), 3) == alpha_n(9, 3)
    with pytest.raises(ValueError):
        reg_closed_form((10, 5), 5)  # gap 5 but 5 | 10 needs >= 6


def test_closed_form_matches_regularize():
    for p in (3, 5):
        for n in range(1, 20):
            for lam in partitions_of(n, is_strict):
                try:
                    closed = reg_closed_form(lam, p)
                except ValueError:
                    continue
                assert closed == regularize(lam, p), (lam, p)


def test_leading_coefficient_anchors():
    assert leading_coefficient((10,), 3) == 1
    # p | n with n even carries the halved bracket, so the coefficient is 2
    assert leading_coefficient((6,), 3) == 2
    assert leading_coefficient((10,), 5) == 2
    # fixed points of regularization
    assert leading_coefficient((4, 2), 3) == 1
    assert leading_coefficient((3, 1), 3) == 2 ** ((1 + 0 - 1) // 2)


def test_leading_coefficient_exponent_integral():
    for p in (3, 5, 7):
        for n in range(1, 17):
            for lam in partitions_of(n, is_strict):
                coeff = leading_coefficient(lam, p)
                assert coeff in (1, 2, 4, 8), (lam, p, coeff)
