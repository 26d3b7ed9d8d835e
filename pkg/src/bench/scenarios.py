"""
Scripted worst-case and best-case growth scenarios starting from a one-cell board
"""
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from config.board_config import SCENARIO_MAX_MOVES
from src.errors import ConfigError
from src.expansion.strategies import Family
from src.geometry.tiling import (
    PERIMETER_STEP, BoardSpec, CanonCoord, Shape, canonical_key, cell_centroid, contains,
    enumerate_board, is_interior, perimeter_added_cells, triangle_anchor, vertex_neighbors,
    vertex_offsets,
)


class Case(str, Enum):
    WORST = 'worst'
    BEST = 'best'

    @classmethod
    def parse(cls, name: str) -> 'Case':
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise ValueError(f"Unknown case '{name}' (expected worst or best)") from None


@dataclass(frozen=True)
class GrowthScenario:
    shape: Shape
    family: Family
    case: Case
    moves: Tuple[CanonCoord, ...]

    @property
    def budget(self) -> int:
        return len(self.moves)


def _first_cell(spec: BoardSpec) -> CanonCoord:
    """Cell with id 0 on a regular board"""
    if spec.shape is Shape.SQUARE:
        lo = -(spec.dim // 2)
        return (lo, lo)
    if spec.shape is Shape.HEXAGON:
        return (0, -(spec.dim - 1))
    return triangle_anchor(spec.dim)


def _peri_worst(shape: Shape, budget: int) -> List[CanonCoord]:
    """Always play the first cell of the board, which is on its edge"""
    moves, dim = [], 1
    for _ in range(budget):
        moves.append(_first_cell(BoardSpec(shape, dim)))
        dim = perimeter_added_cells(shape, dim).new_dim
    return moves


def _zone_worst(shape: Shape, budget: int) -> List[CanonCoord]:
    """Keep extending a straight run away from the existing cells"""
    if shape is Shape.SQUARE:
        return [(k, k) for k in range(budget)]
    if shape is Shape.HEXAGON:
        return [(k, 0) for k in range(budget)]
    moves = [(0, 0)]
    j = 1
    while len(moves) < budget:
        moves.append((2 * j, 1 - 2 * j))  # Down cell
        moves.append((2 * j, -2 * j))  # Up cell below it
        j += 1
    return moves[:budget]


def _layer(shape: Shape, c: CanonCoord) -> int:
    """Smallest number of perimeter rings around the origin cell that covers c"""
    step = PERIMETER_STEP[shape]
    k = 0
    while not contains(BoardSpec(shape, 1 + step * k), c):
        k += 1
    return k


def _hops(shape: Shape, region: List[CanonCoord]) -> Dict[CanonCoord, int]:
    """Vertex-adjacency distance from the origin inside region"""
    inside = set(region)
    dist = {(0, 0): 0}
    queue = deque([(0, 0)])
    while queue:
        c = queue.popleft()
        x, y = c
        for dx, dy in vertex_offsets(shape, c):
            n = (x + dx, y + dy)
            if n in inside and n not in dist:
                dist[n] = dist[c] + 1
                queue.append(n)
    return dist


def spiral_order(shape: Shape, layers: int) -> List[CanonCoord]:
    """
    Cells within the given number of rings, ordered ring by ring, nearest
    first, then counter-clockwise from the positive x axis
    """
    region = enumerate_board(BoardSpec(shape, 1 + PERIMETER_STEP[shape] * layers))
    hops = _hops(shape, region)
    ox, oy = cell_centroid(shape, (0, 0))

    def key(c):
        cx, cy = cell_centroid(shape, c)
        angle = math.atan2(cy - oy, cx - ox) % (2 * math.pi)
        return (_layer(shape, c), hops.get(c, len(region)), round(angle, 9), canonical_key(shape, c))

    return sorted(region, key=key)


def _layers_for(shape: Shape, budget: int) -> int:
    step = PERIMETER_STEP[shape]
    layers = 0
    while len(enumerate_board(BoardSpec(shape, 1 + step * layers))) < budget:
        layers += 1
    return layers + 2


def _best(shape: Shape, family: Family, budget: int) -> List[CanonCoord]:
    """Play the first spiral cell that is empty and already on the board"""
    order = spiral_order(shape, _layers_for(shape, budget))
    played = set()
    moves = []
    dim = 1
    cells = {(0, 0)}

    for _ in range(budget):
        if family is Family.PERI:
            spec = BoardSpec(shape, dim)
            pick = next((c for c in order if c not in played and contains(spec, c)), None)
        else:
            pick = next((c for c in order if c not in played and c in cells), None)
        if pick is None:
            raise ConfigError(f"Spiral ran out of cells after {len(moves)} moves")

        moves.append(pick)
        played.add(pick)
        if family is Family.PERI:
            if not is_interior(BoardSpec(shape, dim), pick):
                dim = perimeter_added_cells(shape, dim).new_dim
        else:
            cells |= vertex_neighbors(shape, pick)
    return moves


def generate_scenario(shape: Shape, family: Family, case: Case, budget: int) -> GrowthScenario:
    """
    Deterministic move list for one growth pattern

    Args:
        shape: Tiling
        family: PERI or ZONE
        case: WORST (maximal growth per move) or BEST (compact spiral)
        budget: Number of moves (1..200)
    """
    if not 1 <= budget <= SCENARIO_MAX_MOVES:
        raise ConfigError(f"Scenario budget must be within 1..{SCENARIO_MAX_MOVES}, got {budget}")
    if case is Case.WORST:
        moves = _peri_worst(shape, budget) if family is Family.PERI else _zone_worst(shape, budget)
    else:
        moves = _best(shape, family, budget)
    return GrowthScenario(shape, family, case, tuple(moves))
