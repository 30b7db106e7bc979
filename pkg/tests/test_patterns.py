"""Cell-pattern parsing and the row/column selection matcher."""
import pytest

from weylchar.diagrams import (
    Cell,
    contains_pattern,
    diagram,
    parse_pattern,
    pattern_grid,
    render_pattern,
)

WORKED = diagram([(1, 3), (2, 3), ()])

# The worked example's nonempty part as an exact two-column configuration:
# any diagram whose restriction to some rows/columns equals it has a
# repeated coefficient, which makes this a handy synthetic test pattern.
WITNESS_LINES = ["#x", "x#", "##"]


def test_parse_and_render_round_trip():
    text = "columnswap: true\n#x\nx#\n##"
    p = parse_pattern(text)
    assert p.rows == 3 and p.cols == 2
    assert p.column_swap_allowed
    assert p.cells[0] == (Cell.REQUIRED, Cell.FORBIDDEN)
    assert render_pattern(p) == text
    assert parse_pattern(render_pattern(p)) == p


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_pattern("#x\nx#")  # missing header
    with pytest.raises(ValueError):
        parse_pattern("columnswap: maybe\n#x")
    with pytest.raises(ValueError):
        parse_pattern("columnswap: false\n#?")
    with pytest.raises(ValueError):
        pattern_grid([])


def test_matcher_on_worked_example():
    p = pattern_grid(WITNESS_LINES)
    assert contains_pattern(WORKED, p)
    # first two rows only: no row selection yields the bottom ## row
    assert not contains_pattern(diagram([(1,), (2,), ()]), p)


def test_matcher_requires_enough_rows_and_columns():
    p = pattern_grid(["#", "#"])
    assert not contains_pattern(diagram([(1,)]), p)
    assert contains_pattern(diagram([(1, 2)]), p)


def test_free_cells_match_anything():
    free = pattern_grid(["..", ".."])
    assert contains_pattern(diagram([], n=2), free)
    assert contains_pattern(WORKED, free)
    assert not contains_pattern(diagram([(1,)]), free)  # needs two columns


def test_forbidden_cells():
    p = pattern_grid(["x"])
    # a full grid has no absent box to select
    assert not contains_pattern(diagram([(1, 2), (1, 2)]), p)
    assert contains_pattern(diagram([(1,), ()]), p)
    assert contains_pattern(diagram([(1,), (1,)]), p)  # row 2 is vacant


def test_column_swap_variants():
    # required boxes in the anti-diagonal order only matchable after a swap
    p_noswap = pattern_grid(["#x", "x#"])
    p_swap = pattern_grid(["#x", "x#"], column_swap_allowed=True)
    d = diagram([(2,), (1,)])  # boxes (2,1) and (1,2)
    assert not contains_pattern(d, p_noswap)
    assert contains_pattern(d, p_swap)


def test_row_order_is_preserved():
    # rows cannot be reordered: a lone box below an absence differs from above
    p = pattern_grid(["#", "x"])
    assert contains_pattern(diagram([(1,), ()], n=2), p)
    assert not contains_pattern(diagram([(2,)], n=2), p)


def test_adding_free_border_keeps_matches_when_grid_is_big_enough():
    p = pattern_grid(WITNESS_LINES)
    padded = pattern_grid([line + "." for line in WITNESS_LINES] + ["..."])
    big = diagram([(1, 3), (2, 3), (), ()])  # same boxes on a 4x4 grid
    assert contains_pattern(big, p)
    assert contains_pattern(big, padded)
