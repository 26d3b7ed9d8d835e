"""
Square, hexagonal and triangular lattices: coordinates, regular boards,
neighborhoods and the closed-form perimeter expansion formulas.

Coordinates are integer pairs:
    square   (x, y)  column and row
    hexagon  (q, r)  axial, point-topped, rows are constant r
    triangle (x, y)  column and band, Up iff x + y is even

Every regular board is centered on the lattice origin and its cell ids follow
the canonical order: bottom row first, left to right inside a row. A
triangular band is split into two rows, its Up cells then its Down cells.
"""
import math
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import List, NamedTuple, Set, Tuple

CanonCoord = Tuple[int, int]
VertexKey = Tuple[int, int]


class Shape(str, Enum):
    """The three regular tilings"""
    SQUARE = 'square'
    HEXAGON = 'hexagon'
    TRIANGLE = 'triangle'

    @classmethod
    def parse(cls, name: str) -> 'Shape':
        """Look a shape up by name (case insensitive)"""
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            choices = ', '.join(s.value for s in cls)
            raise ValueError(f"Unknown shape '{name}' (expected one of: {choices})") from None


class Orient(str, Enum):
    UP = 'up'
    DOWN = 'down'


@dataclass(frozen=True)
class BoardSpec:
    """A regular board: shape plus cells per side"""
    shape: Shape
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"Board dimension must be >= 1, got {self.dim}")


class Growth(NamedTuple):
    added: int
    new_dim: int


# Dimension gained by one ring of cells
PERIMETER_STEP = {Shape.SQUARE: 2, Shape.HEXAGON: 1, Shape.TRIANGLE: 3}

# Neighbor counts of a cell with a full neighborhood
VERTEX_DEGREE = {Shape.SQUARE: 8, Shape.HEXAGON: 6, Shape.TRIANGLE: 12}
EDGE_DEGREE = {Shape.SQUARE: 4, Shape.HEXAGON: 6, Shape.TRIANGLE: 3}

SQUARE_EDGE_OFFSETS = ((1, 0), (0, 1), (-1, 0), (0, -1))
SQUARE_VERTEX_OFFSETS = SQUARE_EDGE_OFFSETS + ((1, 1), (-1, 1), (-1, -1), (1, -1))

HEX_DIRECTIONS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))

TRI_UP_EDGE_OFFSETS = ((-1, 0), (1, 0), (0, -1))
TRI_DOWN_EDGE_OFFSETS = ((-1, 0), (1, 0), (0, 1))
TRI_UP_VERTEX_OFFSETS = (
    tuple((dx, -1) for dx in range(-2, 3))
    + ((-2, 0), (-1, 0), (1, 0), (2, 0))
    + tuple((dx, 1) for dx in range(-1, 2))
)
TRI_DOWN_VERTEX_OFFSETS = tuple((dx, -dy) for dx, dy in TRI_UP_VERTEX_OFFSETS)

# One direction per lattice axis, used for line detection
LINE_AXES = {
    Shape.SQUARE: ((1, 0), (0, 1), (1, 1), (1, -1)),
    Shape.HEXAGON: ((1, 0), (0, 1), (1, -1)),
}

_TRI_HEIGHT = math.sqrt(3) / 2


def is_up(c: CanonCoord) -> bool:
    return (c[0] + c[1]) % 2 == 0


def triangle_orient(c: CanonCoord) -> Orient:
    return Orient.UP if is_up(c) else Orient.DOWN


def vertex_offsets(shape: Shape, c: CanonCoord) -> Tuple[CanonCoord, ...]:
    if shape is Shape.SQUARE:
        return SQUARE_VERTEX_OFFSETS
    if shape is Shape.HEXAGON:
        return HEX_DIRECTIONS
    return TRI_UP_VERTEX_OFFSETS if is_up(c) else TRI_DOWN_VERTEX_OFFSETS


def edge_offsets(shape: Shape, c: CanonCoord) -> Tuple[CanonCoord, ...]:
    if shape is Shape.SQUARE:
        return SQUARE_EDGE_OFFSETS
    if shape is Shape.HEXAGON:
        return HEX_DIRECTIONS
    return TRI_UP_EDGE_OFFSETS if is_up(c) else TRI_DOWN_EDGE_OFFSETS


def vertex_neighbors(shape: Shape, c: CanonCoord) -> Set[CanonCoord]:
    """Cells sharing at least one vertex with c (8 / 6 / 12)"""
    x, y = c
    return {(x + dx, y + dy) for dx, dy in vertex_offsets(shape, c)}


def edge_neighbors(shape: Shape, c: CanonCoord) -> Set[CanonCoord]:
    """Cells sharing an edge with c (4 / 6 / 3)"""
    x, y = c
    return {(x + dx, y + dy) for dx, dy in edge_offsets(shape, c)}


def cell_vertices(shape: Shape, c: CanonCoord) -> Tuple[VertexKey, ...]:
    """
    Corner points of a cell in counter-clockwise order, as scaled integers

    Square corners are lattice points. Hexagon corners are (2q + r ± 1, 3r ± 1)
    and (2q + r, 3r ± 2). Triangle corners are (x ± 1, y) style half-steps.
    """
    x, y = c
    if shape is Shape.SQUARE:
        return ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))
    if shape is Shape.HEXAGON:
        cx, cy = 2 * x + y, 3 * y
        return ((cx, cy - 2), (cx + 1, cy - 1), (cx + 1, cy + 1),
                (cx, cy + 2), (cx - 1, cy + 1), (cx - 1, cy - 1))
    if is_up(c):
        return ((x - 1, y), (x + 1, y), (x, y + 1))
    return ((x, y), (x + 1, y + 1), (x - 1, y + 1))


def cell_centroid(shape: Shape, c: CanonCoord) -> Tuple[float, float]:
    """Cartesian center of a cell (unit edge length)"""
    x, y = c
    if shape is Shape.SQUARE:
        return (x + 0.5, y + 0.5)
    if shape is Shape.HEXAGON:
        return (math.sqrt(3) * (x + y / 2), 1.5 * y)
    third = 1 / 3 if is_up(c) else 2 / 3
    return (x / 2, (y + third) * _TRI_HEIGHT)


def canonical_key(shape: Shape, c: CanonCoord) -> tuple:
    """Sort key of the canonical cell order"""
    if shape is Shape.TRIANGLE:
        return (c[1], 0 if is_up(c) else 1, c[0])
    return (c[1], c[0])


def cell_count(spec: BoardSpec) -> int:
    d = spec.dim
    if spec.shape is Shape.HEXAGON:
        return 3 * d * (d - 1) + 1
    return d * d


def perimeter_added_cells(shape: Shape, prev_dim: int) -> Growth:
    """
    Cells added by one perimeter ring around a regular board

    Args:
        shape: Tiling
        prev_dim: Side of the board before expansion

    Returns:
        Growth(added, new_dim)
    """
    if prev_dim < 1:
        raise ValueError(f"Board dimension must be >= 1, got {prev_dim}")
    if shape is Shape.SQUARE:
        return Growth((4 * (prev_dim + 2)) - 4, prev_dim + 2)
    if shape is Shape.HEXAGON:
        return Growth((6 * (prev_dim + 1)) - 6, prev_dim + 1)
    return Growth((3 * (((prev_dim + 3) * 2) - 1)) - 6, prev_dim + 3)


def triangle_anchor(dim: int) -> CanonCoord:
    """Left-most Up cell of the bottom band of a centered triangular board"""
    y0 = -(dim // 3)
    x0 = -(dim - 1)
    if (x0 + y0) % 2:
        x0 -= 1
    return (x0, y0)


def enumerate_board(spec: BoardSpec) -> List[CanonCoord]:
    """Cells of a regular board, position i holding the cell with id i"""
    d = spec.dim
    if spec.shape is Shape.SQUARE:
        lo = -(d // 2)
        return [(x, y) for y in range(lo, lo + d) for x in range(lo, lo + d)]

    if spec.shape is Shape.HEXAGON:
        radius = d - 1
        return [(q, r)
                for r in range(-radius, radius + 1)
                for q in range(max(-radius, -radius - r), min(radius, radius - r) + 1)]

    x0, y0 = triangle_anchor(d)
    cells = []
    for band in range(d):
        y = y0 + band
        start = x0 + band
        width = 2 * (d - band) - 1
        cells.extend((x, y) for x in range(start, start + width, 2))
        cells.extend((x, y) for x in range(start + 1, start + width - 1, 2))
    return cells


def contains(spec: BoardSpec, c: CanonCoord) -> bool:
    """Whether a regular board holds the cell c"""
    x, y = c
    d = spec.dim
    if spec.shape is Shape.SQUARE:
        lo = -(d // 2)
        return lo <= x < lo + d and lo <= y < lo + d
    if spec.shape is Shape.HEXAGON:
        return max(abs(x), abs(y), abs(x + y)) <= d - 1
    x0, y0 = triangle_anchor(d)
    band = y - y0
    if not 0 <= band < d:
        return False
    start = x0 + band
    return start <= x <= start + 2 * (d - band) - 2


def is_interior(spec: BoardSpec, c: CanonCoord) -> bool:
    """Whether every vertex neighbor of c lies on the regular board"""
    inner = spec.dim - PERIMETER_STEP[spec.shape]
    return inner >= 1 and contains(BoardSpec(spec.shape, inner), c)


def row_lengths(spec: BoardSpec) -> List[int]:
    d = spec.dim
    if spec.shape is Shape.SQUARE:
        return [d] * d
    if spec.shape is Shape.HEXAGON:
        return [2 * d - 1 - abs(r) for r in range(-(d - 1), d)]
    lengths = []
    for band in range(d):
        lengths.extend((d - band, d - band - 1))
    return lengths[:-1]


def row_of(spec: BoardSpec, cell_id: int) -> int:
    """Row of a cell id, counted from 0 at the bottom"""
    if not 0 <= cell_id < cell_count(spec):
        raise ValueError(f"Cell id {cell_id} is not on a {spec.shape.value} board of dim {spec.dim}")
    return bisect_right(list(accumulate(row_lengths(spec))), cell_id)


def perimeter_map_index(shape: Shape, prev_dim: int, row: int, prev_cell_id: int) -> int:
    """
    New id of a cell after one perimeter expansion

    Args:
        shape: Tiling
        prev_dim: Side of the board before expansion
        row: Row of the cell on the previous board
        prev_cell_id: Cell id on the previous board

    Returns:
        Cell id on the expanded board
    """
    spec = BoardSpec(shape, prev_dim)
    actual = row_of(spec, prev_cell_id)
    if actual != row:
        raise ValueError(f"Cell {prev_cell_id} lies on row {actual}, not row {row}")
    if shape is Shape.SQUARE:
        return (prev_dim + 1) + (2 * (row + 1)) + prev_cell_id
    if shape is Shape.HEXAGON:
        return prev_dim + (2 * (row + 1)) + prev_cell_id
    return ((prev_dim + 3) * 2) - 2 + (2 * (row + 1)) + prev_cell_id


def line_axes(shape: Shape) -> Tuple[CanonCoord, ...]:
    """One unit step per straight lattice axis"""
    if shape not in LINE_AXES:
        raise ValueError(f"Straight lines are not defined on the {shape.value} tiling")
    return LINE_AXES[shape]
