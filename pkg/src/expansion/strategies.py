"""
Board growth strategies: perimeter rings and local zones, with their index mappings
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from src.geometry.tiling import (
    BoardSpec, CanonCoord, Shape, perimeter_added_cells, row_lengths, vertex_neighbors,
)
from src.geometry.topology import Topology, build_from_cells, build_regular

logger = logging.getLogger(__name__)


class Family(str, Enum):
    PERI = 'peri'
    ZONE = 'zone'

    @classmethod
    def parse(cls, name: str) -> 'Family':
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise ValueError(f"Unknown expansion family '{name}' (expected peri or zone)") from None


class Strategy(str, Enum):
    """Board management strategies"""
    BASE = 'BASE'
    PERI_RE = 'PERI-RE'
    PERI_MAP = 'PERI-MAP'
    ZONE_RE = 'ZONE-RE'
    ZONE_MAP = 'ZONE-MAP'

    @classmethod
    def parse(cls, name: str) -> 'Strategy':
        """Accepts 'PERI-MAP', 'peri_map' and similar spellings"""
        key = str(name).strip().upper().replace('_', '-')
        try:
            return cls(key)
        except ValueError:
            choices = ', '.join(s.value for s in cls)
            raise ValueError(f"Unknown strategy '{name}' (expected one of: {choices})") from None

    @classmethod
    def for_family(cls, family: Family, replay: bool = False) -> 'Strategy':
        prefix = 'PERI' if family is Family.PERI else 'ZONE'
        return cls(f"{prefix}-{'RE' if replay else 'MAP'}")

    @classmethod
    def expanding(cls) -> Tuple['Strategy', ...]:
        return tuple(s for s in cls if s is not cls.BASE)

    @property
    def family(self) -> Optional[Family]:
        if self is Strategy.BASE:
            return None
        return Family.PERI if self.value.startswith('PERI') else Family.ZONE

    @property
    def replays(self) -> bool:
        return self.value.endswith('-RE')


@dataclass(frozen=True, eq=False)
class IndexMapping:
    """Old board cell id -> new board cell id"""
    old_to_new: np.ndarray
    new_count: int

    @cached_property
    def added(self) -> np.ndarray:
        """New cell ids that no old cell maps to"""
        return np.setdiff1d(np.arange(self.new_count), self.old_to_new)

    @property
    def old_count(self) -> int:
        return len(self.old_to_new)

    @property
    def is_identity(self) -> bool:
        return self.new_count == self.old_count and bool(np.all(self.old_to_new == np.arange(self.old_count)))

    @classmethod
    def identity(cls, count: int) -> 'IndexMapping':
        return cls(np.arange(count, dtype=np.int64), count)

    def check(self, old: Topology, new: Topology, offset: CanonCoord = (0, 0)):
        """Raise AssertionError unless the mapping is injective and keeps coordinates"""
        if len(self.old_to_new) != old.cell_count or self.new_count != new.cell_count:
            raise AssertionError("mapping size does not match the boards")
        if len(np.unique(self.old_to_new)) != self.old_count:
            raise AssertionError("mapping is not injective")
        if self.old_count and (self.old_to_new.min() < 0 or self.old_to_new.max() >= self.new_count):
            raise AssertionError("mapping leaves the new board")
        if len(self.added) + self.old_count != self.new_count:
            raise AssertionError("mapped and added cells do not cover the new board")
        dx, dy = offset
        for old_id, new_id in enumerate(self.old_to_new):
            x, y = old.coords[old_id]
            if new.coords[int(new_id)] != (x + dx, y + dy):
                raise AssertionError(f"cell {old_id} moved from {old.coords[old_id]} to {new.coords[int(new_id)]}")


@dataclass
class ExpansionEvent:
    """One board growth, recorded for diagnostics and metrics"""
    move_index: int
    strategy: Strategy
    placed: CanonCoord
    old_cells: int
    new_cells: int
    old_dim: Optional[int]  # None for zone-grown boards
    new_dim: Optional[int]
    mapping: IndexMapping = field(repr=False)

    @classmethod
    def between(cls, move_index: int, strategy: Strategy, placed: CanonCoord,
                old: Topology, new: Topology, mapping: IndexMapping) -> 'ExpansionEvent':
        return cls(move_index, strategy, placed, old.cell_count, new.cell_count,
                   old.spec.dim if old.spec else None, new.spec.dim if new.spec else None, mapping)

    @property
    def added(self) -> int:
        return self.new_cells - self.old_cells

    def to_record(self) -> dict:
        return {
            'moveIndex': self.move_index,
            'strategy': self.strategy.value,
            'placed': list(self.placed),
            'oldCells': self.old_cells,
            'newCells': self.new_cells,
            'oldDim': self.old_dim,
            'newDim': self.new_dim,
            'added': self.added,
        }


def _perimeter_base(shape: Shape, dim: int) -> int:
    if shape is Shape.SQUARE:
        return dim + 1
    if shape is Shape.HEXAGON:
        return dim
    return ((dim + 3) * 2) - 2


def perimeter_expand(t: Topology) -> Tuple[Topology, IndexMapping]:
    """
    Surround a regular board with one full ring of cells

    Args:
        t: Regular topology of dimension d

    Returns:
        (expanded topology, mapping of every old cell)
    """
    if t.spec is None:
        raise ValueError("Perimeter expansion needs a regular board")
    shape, dim = t.spec.shape, t.spec.dim
    growth = perimeter_added_cells(shape, dim)
    new = build_regular(BoardSpec(shape, growth.new_dim))

    lengths = row_lengths(t.spec)
    rows = np.repeat(np.arange(len(lengths), dtype=np.int64), lengths)
    old_to_new = _perimeter_base(shape, dim) + 2 * (rows + 1) + np.arange(t.cell_count, dtype=np.int64)

    logger.debug("perimeter %s dim %d -> %d (+%d cells)", shape.value, dim, growth.new_dim, growth.added)
    return new, IndexMapping(old_to_new, new.cell_count)


def zone_expand(t: Topology, placed: CanonCoord) -> Tuple[Topology, IndexMapping]:
    """
    Add the missing cells sharing a vertex with the placed cell

    Args:
        t: Current topology
        placed: Cell the piece is played on

    Returns:
        (expanded topology, traversal-counter mapping)
    """
    placed = tuple(placed)
    if placed not in t.index:
        raise ValueError(f"Cell {placed} is not on the board")

    missing = {c for c in vertex_neighbors(t.shape, placed) if c not in t.index}
    if not missing:
        return t, IndexMapping.identity(t.cell_count)

    new = build_from_cells(t.shape, t.coords + tuple(missing))

    # Old cells keep their relative order; each id shifts by the added cells seen so far
    old_to_new = np.empty(t.cell_count, dtype=np.int64)
    counter = 0
    for new_id, c in enumerate(new.coords):
        if c in missing:
            counter += 1
        else:
            old_to_new[new_id - counter] = new_id

    logger.debug("zone %s at %s: %d -> %d cells", t.shape.value, placed, t.cell_count, new.cell_count)
    return new, IndexMapping(old_to_new, new.cell_count)
