"""
Board graphs: cells, shared vertices and edges, adjacency and perimeter
"""
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

from src.geometry.tiling import (
    BoardSpec, CanonCoord, Shape, VERTEX_DEGREE, canonical_key, cell_vertices,
    edge_offsets, enumerate_board, is_up, vertex_offsets,
)


class Topology:
    """Immutable snapshot of one generated board"""

    def __init__(self, shape: Shape, coords: Iterable[CanonCoord], spec: Optional[BoardSpec] = None):
        """
        Args:
            shape: Tiling of every cell
            coords: Cells in id order
            spec: Regular board the cells were generated from, if any
        """
        self.shape = shape
        self.spec = spec
        self.coords: Tuple[CanonCoord, ...] = tuple(coords)
        if not self.coords:
            raise ValueError("A board needs at least one cell")
        self.index: Dict[CanonCoord, int] = {c: i for i, c in enumerate(self.coords)}
        if len(self.index) != len(self.coords):
            raise ValueError("Duplicate cells in board")

        self.vertex_adjacency = self._adjacency(vertex_offsets)
        self.edge_adjacency = self._adjacency(edge_offsets)

        full = VERTEX_DEGREE[shape]
        self.perimeter = frozenset(
            cell_id for cell_id, near in enumerate(self.vertex_adjacency) if len(near) < full
        )

    def _adjacency(self, offsets_of) -> Tuple[Tuple[int, ...], ...]:
        """Neighbor id lists restricted to present cells"""
        index = self.index
        table = []
        for c in self.coords:
            x, y = c
            near = [index.get((x + dx, y + dy)) for dx, dy in offsets_of(self.shape, c)]
            table.append(tuple(sorted(n for n in near if n is not None)))
        return tuple(table)

    @cached_property
    def _graph(self):
        """Deduplicated vertices and edges in first-seen order"""
        vertex_ids: Dict[Tuple[int, int], int] = {}
        edge_ids: Dict[Tuple[int, int], int] = {}
        cell_vertices_table: List[Tuple[int, ...]] = []
        cell_edges_table: List[Tuple[int, ...]] = []

        for c in self.coords:
            corners = tuple(vertex_ids.setdefault(v, len(vertex_ids)) for v in cell_vertices(self.shape, c))
            sides = []
            for k, a in enumerate(corners):
                b = corners[(k + 1) % len(corners)]
                key = (a, b) if a < b else (b, a)
                sides.append(edge_ids.setdefault(key, len(edge_ids)))
            cell_vertices_table.append(corners)
            cell_edges_table.append(tuple(sides))

        return (tuple(vertex_ids), tuple(edge_ids),
                tuple(cell_vertices_table), tuple(cell_edges_table))

    @property
    def vertices(self) -> Tuple[Tuple[int, int], ...]:
        return self._graph[0]

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._graph[1]

    @property
    def cell_vertices(self) -> Tuple[Tuple[int, ...], ...]:
        return self._graph[2]

    @property
    def cell_edges(self) -> Tuple[Tuple[int, ...], ...]:
        return self._graph[3]

    def precompute(self) -> 'Topology':
        """Force the vertex and edge tables"""
        self._graph
        return self

    @property
    def cell_count(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_regular(self) -> bool:
        return self.spec is not None

    def coord_of(self, cell_id: int) -> CanonCoord:
        self._check_id(cell_id)
        return self.coords[cell_id]

    def id_of(self, c: CanonCoord) -> Optional[int]:
        return self.index.get(tuple(c))

    def contains(self, c: CanonCoord) -> bool:
        return tuple(c) in self.index

    def is_perimeter(self, cell_id: int) -> bool:
        self._check_id(cell_id)
        return cell_id in self.perimeter

    def _check_id(self, cell_id: int):
        if not 0 <= cell_id < len(self.coords):
            raise ValueError(f"Cell id {cell_id} out of range 0..{len(self.coords) - 1}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return (self.shape is other.shape and self.coords == other.coords
                and self.perimeter == other.perimeter)

    __hash__ = None

    def __repr__(self) -> str:
        kind = f"dim={self.spec.dim}" if self.spec else "irregular"
        return f"Topology({self.shape.value}, {kind}, cells={self.cell_count})"

    def to_dict(self) -> dict:
        """Deterministic debug dump"""
        cells = []
        for cell_id, c in enumerate(self.coords):
            entry = {
                'id': cell_id,
                'coord': list(c),
                'perimeter': cell_id in self.perimeter,
                'edge_adjacent': list(self.edge_adjacency[cell_id]),
                'vertex_adjacent': list(self.vertex_adjacency[cell_id]),
            }
            if self.shape is Shape.TRIANGLE:
                entry['orient'] = 'up' if is_up(c) else 'down'
            cells.append(entry)
        return {
            'shape': self.shape.value,
            'dim': self.spec.dim if self.spec else None,
            'cell_count': self.cell_count,
            'vertex_count': len(self.vertices),
            'edge_count': len(self.edges),
            'cells': cells,
        }


def build_regular(spec: BoardSpec) -> Topology:
    return Topology(spec.shape, enumerate_board(spec), spec)


def build_from_cells(shape: Shape, cells: Iterable[CanonCoord]) -> Topology:
    """Topology over an arbitrary cell set, ids in canonical order"""
    ordered = sorted({tuple(c) for c in cells}, key=lambda c: canonical_key(shape, c))
    return Topology(shape, ordered)


def is_perimeter(t: Topology, cell_id: int) -> bool:
    return t.is_perimeter(cell_id)
