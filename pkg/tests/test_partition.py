import pytest
from hypothesis import given, strategies as st

from lrcex.partition import (
    Partition,
    PartitionError,
    conjugate,
    parse_partition,
    partitions_between,
    partitions_in_box,
    render_partition,
    skew,
    stretch,
)

from conftest import partitions


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4^1,3^2,2^1", (4, 3, 3, 2)),
        ("", ()),
        ("3,2,1", (3, 2, 1)),
        ("4^2, 3^4", (4, 4, 3, 3, 3, 3)),
        ("3,1,0,0", (3, 1)),
        ("0^3", ()),
    ],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == Partition(expected)


@pytest.mark.parametrize("text", ["1,3", "2,x", "3^0", "3^", "-1", "2,,1", "1^2,2"])
def test_parse_partition_rejects(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_canonical_form_drops_zeros():
    assert Partition((3, 1, 0)) == Partition((3, 1))
    assert hash(Partition((3, 1, 0))) == hash(Partition((3, 1)))
    assert len(Partition((2, 0, 0))) == 1


def test_unsorted_parts_rejected():
    with pytest.raises(PartitionError):
        Partition((1, 2))


@pytest.mark.parametrize(
    "lam, expected",
    [((4, 3, 3, 2), (4, 4, 3, 1)), ((), ()), ((3, 2, 1), (3, 2, 1)), ((5,), (1, 1, 1, 1, 1))],
)
def test_conjugate(lam, expected):
    assert conjugate(Partition(lam)) == Partition(expected)


def test_stretch():
    assert stretch(2, Partition((3, 2, 1))) == Partition((6, 4, 2))
    assert stretch(0, Partition((4, 3, 3, 2))) == Partition()
    assert stretch(2, Partition((4, 3, 3, 2))) == Partition((8, 6, 6, 4))


def test_skew_shape():
    s = skew(Partition((4, 2, 1)), Partition((3, 1)))
    assert s.row_lengths == (1, 1, 1)
    assert s.size == 3
    lam = Partition((3, 1))
    assert skew(lam, lam).size == 0
    with pytest.raises(PartitionError):
        skew(Partition((2, 1)), Partition((3,)))
    with pytest.raises(PartitionError):
        skew(Partition((2, 1)), Partition((1, 1, 1)))


def _diagram(lam):
    return {(i, j) for i, p in enumerate(lam) for j in range(p)}


@given(partitions(max_size=20))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions(max_size=12), st.integers(min_value=0, max_value=3))
def test_stretch_size_and_conjugate_diagram(lam, n):
    stretched = stretch(n, lam)
    assert stretched.size == n * lam.size
    # conjugate read off the reflected diagram, built box by box
    cells = {(j, i) for i, j in _diagram(stretched)}
    rows = max((i for i, _ in cells), default=-1) + 1
    by_rows = Partition(sorted((sum(1 for r, _ in cells if r == i) for i in range(rows)), reverse=True))
    assert conjugate(stretched) == by_rows


@given(partitions(max_size=20))
def test_render_round_trip(lam):
    assert parse_partition(render_partition(lam)) == lam


def test_partitions_between_matches_brute_force():
    outer, inner = Partition((4, 3, 3, 1)), Partition((2, 1))
    brute = set()
    for parts in _all_weakly_decreasing(len(outer), outer[0]):
        rho = Partition(parts)
        if outer.contains(rho) and rho.contains(inner):
            brute.add(rho)
    for size in range(outer.size + 1):
        got = list(partitions_between(inner, outer, size))
        assert len(got) == len(set(got))
        assert set(got) == {r for r in brute if r.size == size}


def _all_weakly_decreasing(length, top):
    if length == 0:
        yield ()
        return
    for first in range(top, -1, -1):
        for rest in _all_weakly_decreasing(length - 1, first):
            yield (first,) + rest


def test_partitions_in_box_count():
    from math import comb

    # partitions in an a x b box: binom(a + b, a)
    assert sum(1 for _ in partitions_in_box(2, 21)) == comb(23, 2)
    assert sum(1 for _ in partitions_in_box(3, 4)) == comb(7, 3)
    assert sum(1 for _ in partitions_in_box(2, 3, size=3)) == 2
