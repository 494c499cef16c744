import math

import pytest

from hookwalk.shapes import (
    StrictPartition,
    count_syt,
    hook_cells,
    hook_length,
    log_count_syt,
    removable_cells,
    remove_cell,
    staircase,
    strict_partitions,
)


def small_shapes(max_cells):
    for m in range(1, max_cells + 1):
        yield from strict_partitions(m)


def test_make_strict_partition():
    sp = StrictPartition((4, 2, 1))
    assert sp.parts == (4, 2, 1)
    assert sp.size == 7
    assert len(sp) == 3
    assert StrictPartition(()).parts == ()
    assert StrictPartition(()).size == 0
    with pytest.raises(ValueError):
        StrictPartition((3, 3))
    with pytest.raises(ValueError):
        StrictPartition((2, 3))
    with pytest.raises(ValueError):
        StrictPartition((3, 0))
    with pytest.raises(ValueError):
        StrictPartition((-1,))


def test_partition_is_immutable_value():
    sp = StrictPartition((3, 1))
    with pytest.raises(AttributeError):
        sp.parts = (2, 1)
    assert sp == StrictPartition([3, 1])
    assert hash(sp) == hash(StrictPartition((3, 1)))
    assert StrictPartition(()) != sp
    assert not StrictPartition(())
    assert sp


def test_cell_membership():
    sp = StrictPartition((4, 2, 1))
    assert (1, 1) in sp and (1, 4) in sp
    assert (2, 2) in sp and (2, 3) in sp
    assert (3, 3) in sp
    assert (2, 1) not in sp  # row 2 starts at column 2
    assert (1, 5) not in sp
    assert (4, 4) not in sp
    assert list(sp.cells()) == [
        (1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 3),
    ]


def test_staircase():
    assert staircase(1).parts == (1,)
    assert staircase(2).parts == (3, 1)
    assert staircase(4).parts == (7, 5, 3, 1)
    assert staircase(3).size == 9
    assert staircase(25).size == 625
    with pytest.raises(ValueError):
        staircase(0)


def test_hook_cells_examples():
    sp = StrictPartition((4, 2, 1))
    # arm (1,3),(1,4); leg (2,2); broken row 3 complete
    assert hook_cells(sp, (1, 2)) == {(1, 2), (1, 3), (1, 4), (2, 2), (3, 3)}
    assert hook_cells(StrictPartition((1,)), (1, 1)) == {(1, 1)}
    assert len(hook_cells(StrictPartition((5, 3, 1)), (1, 1))) == 8
    with pytest.raises(ValueError):
        hook_cells(sp, (2, 1))


def test_hook_length_examples():
    sp = StrictPartition((4, 2, 1))
    assert hook_length(sp, (1, 2)) == 5
    assert hook_length(sp, (1, 1)) == 6
    rows = [[hook_length(sp, (i, j)) for j in range(i, sp.row_end(i) + 1)]
            for i in range(1, 4)]
    assert rows == [[6, 5, 4, 1], [3, 2], [1]]
    with pytest.raises(ValueError):
        hook_length(sp, (1, 5))


def test_antidiagonal_hooks_are_one():
    for n in range(1, 7):
        sp = staircase(n)
        for i in range(1, n + 1):
            assert hook_length(sp, (i, 2 * n - i)) == 1
            assert hook_cells(sp, (i, 2 * n - i)) == {(i, 2 * n - i)}


def test_hook_length_matches_set_expansion():
    for shape in small_shapes(12):
        for cell in shape.cells():
            assert hook_length(shape, cell) == len(hook_cells(shape, cell)), (
                shape.parts, cell)


def test_count_syt_examples():
    assert count_syt(StrictPartition((4, 2, 1))) == 7
    assert count_syt(StrictPartition((3, 1))) == 2
    assert count_syt(StrictPartition((5, 3, 1))) == 42
    assert count_syt(StrictPartition(())) == 1
    assert count_syt(StrictPartition((1,))) == 1


def test_count_syt_staircase_values():
    values = {1: 1, 2: 2, 3: 42, 4: 24024}
    for n, expected in values.items():
        assert count_syt(staircase(n)) == expected


def test_count_recurrence():
    for shape in small_shapes(12):
        total = sum(count_syt(remove_cell(shape, c)) for c in removable_cells(shape))
        assert count_syt(shape) == total, shape.parts


def test_log_count_matches_exact():
    for n in (2, 5, 9):
        sp = staircase(n)
        assert math.isclose(log_count_syt(sp), math.log(count_syt(sp)),
                            rel_tol=1e-12)


def test_removable_cells():
    assert removable_cells(StrictPartition((4, 2, 1))) == [(1, 4), (3, 3)]
    assert removable_cells(staircase(3)) == [(1, 5), (2, 4), (3, 3)]
    assert removable_cells(StrictPartition((1,))) == [(1, 1)]
    with pytest.raises(ValueError):
        removable_cells(StrictPartition(()))


def test_removable_is_hook_one():
    for shape in small_shapes(12):
        by_hook = [c for c in shape.cells() if hook_length(shape, c) == 1]
        assert removable_cells(shape) == by_hook, shape.parts


def test_remove_cell():
    assert remove_cell(StrictPartition((3, 1)), (1, 3)).parts == (2, 1)
    assert remove_cell(StrictPartition((3, 1)), (2, 2)).parts == (3,)
    assert remove_cell(StrictPartition((5, 3, 1)), (3, 3)).parts == (5, 3)
    with pytest.raises(ValueError):
        remove_cell(StrictPartition((3, 1)), (1, 2))
    with pytest.raises(ValueError):
        remove_cell(StrictPartition((3, 2)), (1, 3))  # would leave (2,2)


def test_strict_partitions_generator():
    assert [p.parts for p in strict_partitions(1)] == [(1,)]
    for m in range(1, 13):
        shapes = list(strict_partitions(m))
        assert len(set(shapes)) == len(shapes)
        for s in shapes:
            assert s.size == m
    # distinct-part partition counts 1..10: OEIS-style sanity values
    counts = [len(list(strict_partitions(m))) for m in range(1, 11)]
    assert counts == [1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
