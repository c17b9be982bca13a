from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from natmat.errors import EvenInput
from natmat.forest import (
    node_depth,
    predecessor,
    root_of,
    root_of_iterated,
    successor,
    tree_gf_coeffs,
    tree_index,
    tree_prefix,
    tree_term,
    verify_tree_partition,
)
from natmat.numeric import is_dyck

from paper_tables import MATRIX, MATRIX_MISPRINTS, TREES


def brute_memberships(bound):
    """(k, depth) pairs hitting each n < bound, by iterating a -> 2a + 1 from every even root."""
    hits = {n: [] for n in range(bound)}
    for root in range(0, bound, 2):
        a, depth = root, 0
        while a < bound:
            hits[a].append((root // 2, depth))
            a, depth = 2 * a + 1, depth + 1
    return hits


@pytest.mark.parametrize("a, b", [(2, 5), (0, 1), (45, 91)])
def test_successor(a, b):
    assert successor(a) == b


@pytest.mark.parametrize("a, b", [(5, 2), (1, 0)])
def test_predecessor(a, b):
    assert predecessor(a) == b


def test_predecessor_of_root():
    with pytest.raises(EvenInput):
        predecessor(4)


@pytest.mark.parametrize("t, r", [(119, 14), (6, 6), (7, 0)])
def test_root_of(t, r):
    assert root_of(t) == r


@pytest.mark.parametrize("t, k", [(119, 7), (0, 0), (45, 11)])
def test_tree_index(t, k):
    assert tree_index(t) == k


@pytest.mark.parametrize("k, n, v", [(0, 4, 15), (11, 1, 45), (13, 10, 27647)])
def test_tree_term(k, n, v):
    assert tree_term(k, n) == v


def test_tree_term_13_10_by_iteration():
    a = 26
    for _ in range(10):
        a = 2 * a + 1
    assert a == tree_term(13, 10) == 27647


@pytest.mark.parametrize(
    "k, count, prefix",
    [(2, 5, [4, 9, 19, 39, 79]), (0, 1, [0]), (5, 5, [10, 21, 43, 87, 175])],
)
def test_tree_prefix(k, count, prefix):
    assert tree_prefix(k, count) == prefix


@pytest.mark.parametrize(
    "k, count, coeffs",
    [(1, 4, [2, 5, 11, 23]), (0, 5, [0, 1, 3, 7, 15]), (11, 3, [22, 45, 91])],
)
def test_tree_gf_coeffs(k, count, coeffs):
    assert tree_gf_coeffs(k, count) == coeffs


def test_gf_equals_prefix():
    for k in range(51):
        assert tree_gf_coeffs(k, 30) == tree_prefix(k, 30)


GOLDEN_TREES = {
    0: [0, 1, 3, 7, 15],
    1: [2, 5, 11, 23, 47],
    2: [4, 9, 19, 39, 79],
    3: [6, 13, 27, 55, 111],
    4: [8, 17, 35, 71, 143],
    5: [10, 21, 43, 87, 175],
    11: [22, 45, 91, 183, 367],
}


@pytest.mark.parametrize("k", sorted(GOLDEN_TREES))
def test_golden_tree_lists(k):
    assert tree_prefix(k, 5) == GOLDEN_TREES[k]


def test_matrix_rows_are_trees():
    for x, row in enumerate(MATRIX):
        for y, printed in enumerate(row):
            if (x, y) in MATRIX_MISPRINTS:
                assert printed == MATRIX_MISPRINTS[(x, y)]
                assert tree_term(x, y) != printed
            else:
                assert tree_term(x, y) == printed


@pytest.mark.parametrize("root", sorted(TREES))
def test_table1_rows(root):
    not_terms, terms, _ = TREES[root]
    k = root // 2
    nodes = tree_prefix(k, 1 + len(not_terms) + len(terms))
    assert nodes[0] == root
    assert nodes[1:1 + len(not_terms)] == not_terms
    assert nodes[1 + len(not_terms):] == terms
    assert [v for v in nodes[1:] if not is_dyck(v)] == not_terms


@pytest.mark.parametrize("root", sorted(TREES))
def test_dyck_saturation(root):
    not_terms, _, _ = TREES[root]
    tail = tree_prefix(root // 2, 1 + len(not_terms) + 10)[1 + len(not_terms):]
    assert len(tail) == 10
    assert all(is_dyck(v) for v in tail)


def test_successor_predecessor_inverse():
    for a in range(1 << 20):
        assert predecessor(successor(a)) == a
        if a % 2:
            assert successor(predecessor(a)) == a


def test_closed_form_matches_recurrence():
    for k in range(100):
        for n in range(60):
            assert tree_term(k, n + 1) == 2 * tree_term(k, n) + 1


def test_root_consistency():
    for t in range(1 << 20):
        r = root_of(t)
        assert r % 2 == 0
        assert root_of(r) == r


@given(st.integers(min_value=0, max_value=1 << 500))
def test_root_direct_matches_iterated(t):
    assert root_of(t) == root_of_iterated(t)


def test_disjointness_exhaustive():
    hits = brute_memberships(1 << 16)
    for n, pairs in hits.items():
        assert len(pairs) == 1
        k, depth = pairs[0]
        assert (tree_index(n), node_depth(n)) == (k, depth)


def test_partition_bound_8():
    report = verify_tree_partition(8)
    hits = brute_memberships(8)
    assert report.ok and report.collisions == 0
    assert set(report.part_sizes) == {k for pairs in hits.values() for k, _ in pairs} == {0, 1, 2, 3}
    assert report.part_sizes == {0: 4, 1: 2, 2: 1, 3: 1}


def test_partition_bound_1():
    report = verify_tree_partition(1)
    assert report.ok
    assert report.part_sizes == {0: 1}


def test_partition_bound_1e5():
    report = verify_tree_partition(10**5)
    assert report.ok
    assert report.checked == 10**5
    assert report.collisions == report.missing == report.round_trip_failures == 0
    assert report.parts == 50000
    assert report.density(0) == Fraction(17, 10**5)  # 0, 1, 3, ..., 65535


def test_partition_rejects_empty_range():
    with pytest.raises(ValueError):
        verify_tree_partition(0)
