#!/usr/bin/env python3
"""
Board graphs built from regular specs and from arbitrary cell sets
"""
import pytest
from hypothesis import given, strategies as st

from src.geometry.tiling import VERTEX_DEGREE, BoardSpec, Shape, cell_count, is_interior
from src.geometry.topology import Topology, build_from_cells, build_regular, is_perimeter


@pytest.mark.parametrize("shape,dim,vertices,edges", [
    (Shape.SQUARE, 1, 4, 4),
    (Shape.SQUARE, 2, 9, 12),
    (Shape.HEXAGON, 1, 6, 6),
    (Shape.HEXAGON, 2, 24, 30),
    (Shape.TRIANGLE, 1, 3, 3),
    (Shape.TRIANGLE, 4, 15, 30),
])
def test_vertex_and_edge_counts(shape, dim, vertices, edges):
    t = build_regular(BoardSpec(shape, dim))
    assert len(t.vertices) == vertices
    assert len(t.edges) == edges


def test_square_perimeter():
    t = build_regular(BoardSpec(Shape.SQUARE, 4))
    assert t.perimeter == frozenset(range(16)) - {5, 6, 9, 10}
    assert is_perimeter(t, 0)
    assert not is_perimeter(t, 5)


def test_single_cell_is_perimeter():
    for shape in Shape:
        t = build_regular(BoardSpec(shape, 1))
        assert t.cell_count == 1
        assert t.is_perimeter(0)


def test_is_perimeter_rejects_bad_id():
    t = build_regular(BoardSpec(Shape.HEXAGON, 2))
    with pytest.raises(ValueError):
        t.is_perimeter(7)
    with pytest.raises(ValueError):
        t.coord_of(-1)


def test_lookup():
    t = build_regular(BoardSpec(Shape.HEXAGON, 2))
    assert t.id_of((0, 0)) == 3
    assert t.coord_of(3) == (0, 0)
    assert t.id_of((5, 5)) is None
    assert t.contains([1, -1])
    assert t.edge_adjacency[3] == (0, 1, 2, 4, 5, 6)


def test_build_from_cells_orders_canonically():
    t = build_from_cells(Shape.SQUARE, [(1, 1), (0, 0), (1, 0), (0, 1), (0, 0)])
    assert t.coords == ((0, 0), (1, 0), (0, 1), (1, 1))
    assert not t.is_regular
    assert t.perimeter == frozenset(range(4))


def test_equality_ignores_spec():
    regular = build_regular(BoardSpec(Shape.TRIANGLE, 4))
    rebuilt = build_from_cells(Shape.TRIANGLE, reversed(regular.coords))
    assert regular == rebuilt
    assert regular != build_regular(BoardSpec(Shape.TRIANGLE, 1))


def test_rejects_empty_and_duplicate_cells():
    with pytest.raises(ValueError):
        Topology(Shape.SQUARE, [])
    with pytest.raises(ValueError):
        Topology(Shape.SQUARE, [(0, 0), (0, 0)])


def test_to_dict():
    dump = build_regular(BoardSpec(Shape.TRIANGLE, 1)).to_dict()
    assert dump['cell_count'] == 1
    assert dump['vertex_count'] == 3
    assert dump['cells'][0] == {'id': 0, 'coord': [0, 0], 'perimeter': True,
                                'edge_adjacent': [], 'vertex_adjacent': [], 'orient': 'up'}


@given(st.sampled_from(list(Shape)), st.integers(min_value=1, max_value=10))
def test_perimeter_is_complement_of_interior(shape, dim):
    spec = BoardSpec(shape, dim)
    t = build_regular(spec).precompute()
    assert t.cell_count == cell_count(spec)
    for cell_id, c in enumerate(t.coords):
        assert t.is_perimeter(cell_id) != is_interior(spec, c)
        assert len(t.vertex_adjacency[cell_id]) <= VERTEX_DEGREE[shape]
        assert set(t.edge_adjacency[cell_id]) <= set(t.vertex_adjacency[cell_id])


@given(st.sampled_from(list(Shape)), st.integers(min_value=1, max_value=8))
def test_every_edge_is_shared_by_at_most_two_cells(shape, dim):
    t = build_regular(BoardSpec(shape, dim))
    uses = [0] * len(t.edges)
    for sides in t.cell_edges:
        for e in sides:
            uses[e] += 1
    assert max(uses) <= 2
    shared = sum(1 for u in uses if u == 2)
    assert shared == sum(len(n) for n in t.edge_adjacency) // 2


@given(st.sampled_from(list(Shape)), st.integers(min_value=1, max_value=10))
def test_regular_boards_satisfy_euler(shape, dim):
    t = build_regular(BoardSpec(shape, dim))
    assert len(t.vertices) - len(t.edges) + t.cell_count == 1


def test_two_adjacent_squares_share_one_edge():
    t = build_from_cells(Shape.SQUARE, [(0, 0), (1, 0)])
    assert (t.cell_count, len(t.vertices), len(t.edges)) == (2, 6, 7)
    assert len(t.vertices) - len(t.edges) + t.cell_count == 1
