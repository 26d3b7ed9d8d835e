"""
Game configuration: tiling, strategy, components, placement and win rules
"""
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from config.board_config import (
    BOARD_COMPONENT, DEFAULT_BOOTSTRAP_MOVES, DEFAULT_MOVE_CAP, DEFAULT_PLAYERS, GAMES_DIR,
)
from src.errors import ConfigError
from src.expansion.strategies import Strategy
from src.geometry.tiling import CanonCoord, EDGE_DEGREE, LINE_AXES, VERTEX_DEGREE, Shape

ANY_EMPTY = 'any_empty'
ADJACENT_AT_LEAST = 'adjacent_at_least'
NO_WIN = 'none'
EDGE = 'edge'
VERTEX = 'vertex'
LINE_OF_N = 'line'
OPENINGS = ('anywhere', 'origin')


@dataclass(frozen=True)
class ComponentSpec:
    """A component type and who owns it"""
    index: int
    owner: int  # 0 = board
    name: str = ''
    hand: Optional[int] = None  # None = unlimited supply

    def to_dict(self) -> dict:
        data = {'index': self.index, 'owner': self.owner, 'name': self.name}
        if self.hand is not None:
            data['hand'] = self.hand
        return data


@dataclass(frozen=True)
class PlacementRule:
    rule: str = ANY_EMPTY
    k: int = 0
    relation: str = EDGE  # neighbors counted by AdjacentAtLeast

    def describe(self) -> str:
        if self.rule != ADJACENT_AT_LEAST:
            return "AnyEmpty"
        return f"AdjacentAtLeast({self.k}, {self.relation})"


@dataclass(frozen=True)
class WinRule:
    rule: str = NO_WIN
    n: int = 0

    def describe(self) -> str:
        return f"LineOfN({self.n})" if self.rule == LINE_OF_N else "None"


def default_components(players: int) -> Tuple[ComponentSpec, ...]:
    """Initial tile type plus one unlimited chip type per player"""
    specs = [ComponentSpec(BOARD_COMPONENT, 0, 'tile')]
    specs.extend(ComponentSpec(BOARD_COMPONENT + p, p, f'chip{p}') for p in range(1, players + 1))
    return tuple(specs)


@dataclass(frozen=True)
class GameConfig:
    """Everything a playout needs besides its seed"""
    name: str
    shape: Shape
    strategy: Strategy = Strategy.PERI_MAP
    players: int = DEFAULT_PLAYERS
    components: Tuple[ComponentSpec, ...] = field(default=())
    initial_tiles: int = 0
    initial_coords: Optional[Tuple[CanonCoord, ...]] = None
    placement: PlacementRule = PlacementRule()
    win: WinRule = WinRule()
    move_cap: int = DEFAULT_MOVE_CAP
    bootstrap_moves: int = DEFAULT_BOOTSTRAP_MOVES
    opening: str = 'anywhere'

    def __post_init__(self):
        if not self.components:
            object.__setattr__(self, 'components', default_components(self.players))
        if self.initial_coords is not None:
            coords = tuple(tuple(c) for c in self.initial_coords)
            object.__setattr__(self, 'initial_coords', coords)
            if self.initial_tiles == 0:
                object.__setattr__(self, 'initial_tiles', len(coords))
        self.validate()

    def validate(self):
        """Raise ConfigError on an inconsistent configuration"""
        if self.players < 1:
            raise ConfigError(f"players must be >= 1, got {self.players}")
        if self.move_cap < 1:
            raise ConfigError(f"move_cap must be >= 1, got {self.move_cap}")
        if self.bootstrap_moves < 0:
            raise ConfigError(f"bootstrap_moves must be >= 0, got {self.bootstrap_moves}")
        if self.initial_tiles < 0:
            raise ConfigError(f"initial tile count must be >= 0, got {self.initial_tiles}")
        if self.initial_coords is not None and len(self.initial_coords) != self.initial_tiles:
            raise ConfigError("initial tile count does not match the listed coordinates")
        if self.opening not in OPENINGS:
            raise ConfigError(f"opening must be one of {OPENINGS}, got '{self.opening}'")

        if self.placement.rule == ADJACENT_AT_LEAST:
            if self.placement.relation not in (EDGE, VERTEX):
                raise ConfigError(f"Unknown adjacency relation '{self.placement.relation}'")
            degrees = EDGE_DEGREE if self.placement.relation == EDGE else VERTEX_DEGREE
            limit = degrees[self.shape]
            if not 1 <= self.placement.k <= limit:
                raise ConfigError(f"AdjacentAtLeast({self.placement.k}) needs 1 <= k <= {limit} on {self.shape.value}")
        elif self.placement.rule != ANY_EMPTY:
            raise ConfigError(f"Unknown placement rule '{self.placement.rule}'")

        if self.win.rule == LINE_OF_N:
            if self.shape not in LINE_AXES:
                raise ConfigError(f"LineOfN is not supported on the {self.shape.value} tiling")
            if self.win.n < 2:
                raise ConfigError(f"LineOfN needs n >= 2, got {self.win.n}")
        elif self.win.rule != NO_WIN:
            raise ConfigError(f"Unknown win rule '{self.win.rule}'")

        indices = [c.index for c in self.components]
        if len(set(indices)) != len(indices) or min(indices) < 1:
            raise ConfigError("component indices must be unique and >= 1")
        for spec in self.components:
            if not 0 <= spec.owner <= self.players:
                raise ConfigError(f"component {spec.index} has unknown owner {spec.owner}")
            if spec.hand is not None and (spec.hand < 0 or spec.owner == 0):
                raise ConfigError(f"component {spec.index}: hands belong to players and hold >= 0 pieces")
        for p in range(1, self.players + 1):
            if not self.player_components(p):
                raise ConfigError(f"player {p} has no component type")
        if self.initial_tiles and not self.board_components():
            raise ConfigError("initial tiles need a component owned by the board (owner 0)")

    def player_components(self, player: int) -> List[ComponentSpec]:
        return sorted((c for c in self.components if c.owner == player), key=lambda c: c.index)

    def board_components(self) -> List[ComponentSpec]:
        return self.player_components(0)

    def hand_components(self, player: int) -> List[ComponentSpec]:
        return [c for c in self.player_components(player) if c.hand is not None]

    def with_strategy(self, strategy: Strategy) -> 'GameConfig':
        return replace(self, strategy=strategy)

    def with_move_cap(self, move_cap: int) -> 'GameConfig':
        return replace(self, move_cap=move_cap)

    def to_dict(self) -> dict:
        tiles = {'count': self.initial_tiles}
        if self.initial_coords is not None:
            tiles['coords'] = [list(c) for c in self.initial_coords]
        return {
            'name': self.name,
            'shape': self.shape.value,
            'strategy': self.strategy.value,
            'players': self.players,
            'components': [c.to_dict() for c in self.components],
            'initial_tiles': tiles,
            'placement': {'rule': self.placement.rule, 'k': self.placement.k,
                          'relation': self.placement.relation},
            'win': {'rule': self.win.rule, 'n': self.win.n},
            'move_cap': self.move_cap,
            'bootstrap_moves': self.bootstrap_moves,
            'opening': self.opening,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'GameConfig':
        """Build a config from its JSON document form"""
        try:
            players = int(data.get('players', DEFAULT_PLAYERS))
            components = tuple(
                ComponentSpec(int(c['index']), int(c['owner']), c.get('name', ''),
                              None if c.get('hand') is None else int(c['hand']))
                for c in data.get('components', ())
            )
            tiles = data.get('initial_tiles', {}) or {}
            if isinstance(tiles, int):
                tiles = {'count': tiles}
            coords = tiles.get('coords')
            placement = data.get('placement', {}) or {}
            win = data.get('win', {}) or {}
            return cls(
                name=data.get('name', 'unnamed'),
                shape=Shape.parse(data['shape']),
                strategy=Strategy.parse(data.get('strategy', Strategy.PERI_MAP.value)),
                players=players,
                components=components,
                initial_tiles=int(tiles.get('count', len(coords) if coords else 0)),
                initial_coords=None if coords is None else tuple(tuple(int(v) for v in c) for c in coords),
                placement=PlacementRule(placement.get('rule', ANY_EMPTY), int(placement.get('k', 0)),
                                        placement.get('relation', EDGE)),
                win=WinRule(win.get('rule', NO_WIN), int(win.get('n', 0))),
                move_cap=int(data.get('move_cap', DEFAULT_MOVE_CAP)),
                bootstrap_moves=int(data.get('bootstrap_moves', DEFAULT_BOOTSTRAP_MOVES)),
                opening=data.get('opening', 'anywhere'),
            )
        except KeyError as e:
            raise ConfigError(f"Missing config field: {e}") from None
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"Invalid config: {e}") from None


def bundled_games() -> List[str]:
    return sorted(p.stem for p in GAMES_DIR.glob('*.json'))


def load_game_config(name_or_path: Union[str, Path]) -> GameConfig:
    """
    Load a bundled game by name or a GameConfig JSON file by path

    Args:
        name_or_path: e.g. 'andantino-square' or 'my_game.json'
    """
    path = Path(name_or_path)
    if not path.exists():
        bundled = GAMES_DIR / f"{name_or_path}.json"
        if not bundled.exists():
            raise FileNotFoundError(
                f"Game config not found: {name_or_path} (bundled: {', '.join(bundled_games())})")
        path = bundled
    with open(path) as f:
        return GameConfig.from_dict(json.load(f))
