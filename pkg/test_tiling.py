#!/usr/bin/env python3
"""
Lattice geometry: board enumeration, neighborhoods and perimeter formulas
"""
import pytest
from hypothesis import given, strategies as st

from src.geometry.tiling import (
    PERIMETER_STEP, BoardSpec, Shape, canonical_key, cell_count, cell_vertices, contains, edge_neighbors,
    enumerate_board, is_interior, is_up, perimeter_added_cells, perimeter_map_index, row_lengths,
    row_of, triangle_anchor, vertex_neighbors,
)

shapes = st.sampled_from(list(Shape))
dims = st.integers(min_value=1, max_value=14)


@pytest.mark.parametrize("shape,dim,cells", [
    (Shape.SQUARE, 1, 1), (Shape.SQUARE, 4, 16), (Shape.SQUARE, 41, 1681),
    (Shape.HEXAGON, 1, 1), (Shape.HEXAGON, 2, 7), (Shape.HEXAGON, 20, 1141), (Shape.HEXAGON, 21, 1261),
    (Shape.TRIANGLE, 1, 1), (Shape.TRIANGLE, 4, 16), (Shape.TRIANGLE, 148, 21904),
])
def test_cell_count(shape, dim, cells):
    assert cell_count(BoardSpec(shape, dim)) == cells


@pytest.mark.parametrize("shape,dim,added,new_dim", [
    (Shape.SQUARE, 1, 8, 3),
    (Shape.SQUARE, 3, 16, 5),
    (Shape.HEXAGON, 1, 6, 2),
    (Shape.HEXAGON, 2, 12, 3),
    (Shape.TRIANGLE, 1, 15, 4),
    (Shape.TRIANGLE, 4, 33, 7),
    (Shape.SQUARE, 4, 20, 6),
    (Shape.HEXAGON, 3, 18, 4),
    (Shape.TRIANGLE, 3, 27, 6),
])
def test_perimeter_added_cells(shape, dim, added, new_dim):
    assert perimeter_added_cells(shape, dim) == (added, new_dim)


def test_perimeter_added_cells_rejects_empty_board():
    with pytest.raises(ValueError):
        perimeter_added_cells(Shape.SQUARE, 0)


def test_board_spec_rejects_zero_dim():
    with pytest.raises(ValueError):
        BoardSpec(Shape.HEXAGON, 0)


def test_shape_parse():
    assert Shape.parse('Hexagon') is Shape.HEXAGON
    with pytest.raises(ValueError, match="Unknown shape"):
        Shape.parse('octagon')


def test_square_board_layout():
    cells = enumerate_board(BoardSpec(Shape.SQUARE, 4))
    assert cells[0] == (-2, -2)
    assert cells[3] == (1, -2)
    assert cells[4] == (-2, -1)
    assert cells[15] == (1, 1)


def test_hex_board_layout():
    cells = enumerate_board(BoardSpec(Shape.HEXAGON, 2))
    assert cells == [(0, -1), (1, -1), (-1, 0), (0, 0), (1, 0), (-1, 1), (0, 1)]


def test_triangle_board_layout():
    assert triangle_anchor(4) == (-3, -1)
    cells = enumerate_board(BoardSpec(Shape.TRIANGLE, 4))
    assert cells[:7] == [(-3, -1), (-1, -1), (1, -1), (3, -1), (-2, -1), (0, -1), (2, -1)]
    assert cells[8] == (0, 0)
    assert cells[-1] == (0, 2)
    assert row_lengths(BoardSpec(Shape.TRIANGLE, 4)) == [4, 3, 3, 2, 2, 1, 1]


def test_triangle_orientation():
    assert is_up((0, 0))
    assert not is_up((1, 0))
    assert edge_neighbors(Shape.TRIANGLE, (0, 0)) == {(-1, 0), (1, 0), (0, -1)}
    assert edge_neighbors(Shape.TRIANGLE, (1, 0)) == {(0, 0), (2, 0), (1, 1)}


@pytest.mark.parametrize("shape,degree", [(Shape.SQUARE, 8), (Shape.HEXAGON, 6), (Shape.TRIANGLE, 12)])
def test_vertex_neighbor_counts(shape, degree):
    assert len(vertex_neighbors(shape, (0, 0))) == degree
    assert len(vertex_neighbors(shape, (1, 0))) == degree


@given(shapes, dims)
def test_enumeration_matches_count_and_order(shape, dim):
    spec = BoardSpec(shape, dim)
    cells = enumerate_board(spec)
    assert len(cells) == cell_count(spec) == sum(row_lengths(spec))
    assert len(set(cells)) == len(cells)
    assert cells == sorted(cells, key=lambda c: canonical_key(shape, c))
    assert (0, 0) in cells
    assert all(contains(spec, c) for c in cells)


@given(shapes, dims)
def test_contains_is_exactly_the_board(shape, dim):
    spec = BoardSpec(shape, dim)
    cells = set(enumerate_board(spec))
    reach = dim + 3
    for x in range(-2 * reach, 2 * reach + 1):
        for y in range(-reach, reach + 1):
            assert contains(spec, (x, y)) == ((x, y) in cells)


@given(shapes, dims)
def test_interior_cells_have_full_neighborhoods(shape, dim):
    spec = BoardSpec(shape, dim)
    cells = set(enumerate_board(spec))
    for c in cells:
        assert is_interior(spec, c) == vertex_neighbors(shape, c).issubset(cells)


@given(shapes, dims)
def test_perimeter_ring_surrounds_board(shape, dim):
    growth = perimeter_added_cells(shape, dim)
    assert growth.new_dim == dim + PERIMETER_STEP[shape]
    old = set(enumerate_board(BoardSpec(shape, dim)))
    new = set(enumerate_board(BoardSpec(shape, growth.new_dim)))
    assert old < new
    assert len(new) - len(old) == growth.added
    # every old cell is interior after the ring is added
    assert all(is_interior(BoardSpec(shape, growth.new_dim), c) for c in old)


@given(shapes, dims, st.data())
def test_perimeter_map_index_keeps_coordinates(shape, dim, data):
    spec = BoardSpec(shape, dim)
    old = enumerate_board(spec)
    new = enumerate_board(BoardSpec(shape, perimeter_added_cells(shape, dim).new_dim))
    cell_id = data.draw(st.integers(min_value=0, max_value=len(old) - 1))
    row = row_of(spec, cell_id)
    assert new[perimeter_map_index(shape, dim, row, cell_id)] == old[cell_id]


def test_perimeter_map_index_square_example():
    assert [perimeter_map_index(Shape.SQUARE, 4, row_of(BoardSpec(Shape.SQUARE, 4), i), i)
            for i in (5, 6, 9, 10)] == [14, 15, 20, 21]


@pytest.mark.parametrize("shape,dim,row,cell_id,new_id", [
    (Shape.SQUARE, 3, 2, 7, 17),
    (Shape.SQUARE, 3, 0, 0, 6),
    (Shape.HEXAGON, 3, 3, 14, 25),
    (Shape.TRIANGLE, 3, 3, 7, 25),
])
def test_perimeter_map_index_worked_examples(shape, dim, row, cell_id, new_id):
    assert row_of(BoardSpec(shape, dim), cell_id) == row
    assert perimeter_map_index(shape, dim, row, cell_id) == new_id


def test_perimeter_map_index_rejects_wrong_row():
    with pytest.raises(ValueError, match="row"):
        perimeter_map_index(Shape.SQUARE, 4, 0, 5)


def test_row_of_rejects_bad_id():
    with pytest.raises(ValueError):
        row_of(BoardSpec(Shape.HEXAGON, 2), 7)


coords = st.tuples(st.integers(min_value=-20, max_value=20), st.integers(min_value=-20, max_value=20))


@given(shapes, coords)
def test_neighborhoods_are_symmetric(shape, c):
    for n in vertex_neighbors(shape, c):
        assert c in vertex_neighbors(shape, n)
    for n in edge_neighbors(shape, c):
        assert c in edge_neighbors(shape, n)
    assert edge_neighbors(shape, c) <= vertex_neighbors(shape, c)


def shared_corners(shape, a, b):
    return len(set(cell_vertices(shape, a)) & set(cell_vertices(shape, b)))


@given(shapes, coords)
def test_neighborhoods_match_shared_corners(shape, c):
    x, y = c
    window = [(x + dx, y + dy) for dx in range(-4, 5) for dy in range(-4, 5) if (dx, dy) != (0, 0)]
    assert vertex_neighbors(shape, c) == {n for n in window if shared_corners(shape, c, n) >= 1}
    assert edge_neighbors(shape, c) == {n for n in window if shared_corners(shape, c, n) == 2}


@pytest.mark.parametrize("c", [(0, 0), (1, 0), (-3, 2), (4, 5)])
def test_triangle_vertex_neighborhood_has_both_orientations(c):
    ring = vertex_neighbors(Shape.TRIANGLE, c)
    assert len(ring) == 12
    assert sum(1 for n in ring if is_up(n) == is_up(c)) == 6
    assert all(is_up(n) != is_up(c) for n in edge_neighbors(Shape.TRIANGLE, c))
