"""
Plays moves on a board that grows under one of the five strategies
"""
import logging
from dataclasses import replace
from typing import List, Optional

from config.board_config import BASE_DIMS, INITIAL_DIMS
from src.errors import BoardBoundsError, IllegalMoveError
from src.expansion.migration import migrate_state_map, migrate_state_replay
from src.expansion.strategies import ExpansionEvent, Family, Strategy, perimeter_expand, zone_expand
from src.game.rules import refresh_playable, update_status
from src.geometry.tiling import BoardSpec, CanonCoord, Shape, triangle_anchor
from src.geometry.topology import Topology, build_regular
from src.state.game_state import CanonMove, GameState, Move

logger = logging.getLogger(__name__)


def initial_board(shape: Shape, count: int) -> BoardSpec:
    """
    Smallest centered board holding a line of initial tiles and their neighbors

    Args:
        shape: Tiling
        count: Number of initial tiles
    """
    if count < 0:
        raise ValueError(f"Initial tile count must be >= 0, got {count}")
    if count == 0:
        return BoardSpec(shape, INITIAL_DIMS[shape.value])
    if shape is Shape.SQUARE:
        return BoardSpec(shape, count + 2)
    if shape is Shape.HEXAGON:
        return BoardSpec(shape, -(-(count + 3) // 2))
    return BoardSpec(shape, count + 3)


def initial_line(spec: BoardSpec, count: int) -> List[CanonCoord]:
    """Cells of a straight line of initial tiles on the middle row"""
    if count == 0:
        return []
    if spec.shape is Shape.SQUARE:
        lo = -(spec.dim // 2)
        return [(x, 0) for x in range(lo + 1, lo + 1 + count)]
    if spec.shape is Shape.HEXAGON:
        first = -(count // 2)
        return [(q, 0) for q in range(first, first + count)]
    x0, y0 = triangle_anchor(spec.dim)
    return [(x, y0 + 1) for x in range(x0 + 3, x0 + 3 + count)]


class ExpansionEngine:
    """Applies moves and grows the board under one strategy"""

    def __init__(self, config, strategy: Optional[Strategy] = None, check_mappings: bool = False):
        """
        Args:
            config: GameConfig
            strategy: Overrides the config's strategy
            check_mappings: Verify every index mapping against both boards
        """
        strategy = strategy or config.strategy
        self.config = config if config.strategy is strategy else config.with_strategy(strategy)
        self.strategy = strategy
        self.shape = config.shape
        self.check_mappings = check_mappings

    def initial_spec(self) -> BoardSpec:
        if self.strategy is Strategy.BASE:
            return BoardSpec(self.shape, BASE_DIMS[self.shape.value])
        return initial_board(self.shape, self.config.initial_tiles)

    def initial_tile_coords(self) -> List[CanonCoord]:
        if self.config.initial_coords is not None:
            return list(self.config.initial_coords)
        spec = initial_board(self.shape, self.config.initial_tiles)
        return initial_line(spec, self.config.initial_tiles)

    def new_state(self, topology: Optional[Topology] = None, seed: Optional[int] = None) -> GameState:
        """
        Fresh game on a new board (or on a given one)

        Args:
            topology: Start board; a new one is built when omitted
            seed: Seed recorded in the trial
        """
        topology = topology or build_regular(self.initial_spec())
        state = GameState(self.config, topology, seed)

        tiles = []
        component = self.config.board_components()[0].index if self.config.initial_tiles else 0
        for c in self.initial_tile_coords():
            site = topology.id_of(c)
            if site is None:
                raise BoardBoundsError(f"Initial tile {c} is outside the start board")
            tiles.append((site, component, 0))
        state.place_initial(tiles)
        refresh_playable(state)
        return state

    def _expand(self, state: GameState, site: int) -> GameState:
        """Grow the board for a move on a perimeter site"""
        old = state.board_topology
        placed = old.coords[site]
        if self.strategy.family is Family.PERI:
            new, mapping = perimeter_expand(old)
        else:
            new, mapping = zone_expand(old, placed)
        if mapping.is_identity:
            return state

        if self.check_mappings:
            mapping.check(old, new)
        event = ExpansionEvent.between(len(state.trial.moves), self.strategy, placed, old, new, mapping)

        migrate = migrate_state_replay if self.strategy.replays else migrate_state_map
        state = migrate(state, new, mapping)
        state.events.append(event)
        logger.debug("move %d on %s grew the board %d -> %d", event.move_index, placed,
                     old.cell_count, new.cell_count)
        return state

    def play_move(self, state: GameState, move: Move) -> GameState:
        """
        Apply a legal move, growing the board first when it lands on the perimeter

        Args:
            state: Current state
            move: Move with global site indices on the current board

        Returns:
            The state after the move (may be a new object under RE strategies)
        """
        if state.trial.ended:
            raise IllegalMoveError(f"Game is over ({state.trial.status})")
        if move.player != state.mover:
            raise IllegalMoveError(f"Player {move.player} moved out of turn (player {state.mover} to move)")
        board = state.board_topology
        if not 0 <= move.to < board.cell_count:
            if self.strategy is Strategy.BASE:
                raise BoardBoundsError(f"Site {move.to} is outside the fixed board")
            raise IllegalMoveError(f"Site {move.to} is not on the board")
        if not state.board_state.playable[move.to]:
            raise IllegalMoveError(f"Site {move.to} is not a legal placement")

        edge = board.is_perimeter(move.to)
        if edge and self.strategy is not Strategy.BASE:
            coord = board.coords[move.to]
            state = self._expand(state, move.to)
            to = state.board_topology.id_of(coord)
            from_site = move.from_site
            if from_site is not None:
                from_site += state.board_topology.cell_count - board.cell_count
            move = replace(move, to=to, from_site=from_site)

        move = replace(move, edge=edge)
        state.apply_move(move)
        refresh_playable(state)
        update_status(state, move)
        return state

    def resolve(self, state: GameState, cm: CanonMove) -> Move:
        """Site-indexed move for a coordinate-named one"""
        site = state.board_topology.id_of(cm.to)
        if site is None:
            if self.strategy is Strategy.BASE:
                raise BoardBoundsError(f"Cell {cm.to} is outside the fixed board")
            raise IllegalMoveError(f"Cell {cm.to} is not on the board")
        from_site = state.hand_site(cm.player, cm.component) if cm.from_hand else None
        return Move(site, cm.player, cm.component, from_site)

    def play_at(self, state: GameState, coord: CanonCoord, player: Optional[int] = None,
                component: Optional[int] = None) -> GameState:
        """
        Play on a lattice cell, defaulting to the player to move and their first available piece
        """
        player = state.mover if player is None else player
        if component is None:
            available = state.available_components(player)
            if not available:
                raise IllegalMoveError(f"Player {player} has no pieces left")
            component = available[0]
        from_hand = state.hand_site(player, component) is not None
        return self.play_move(state, self.resolve(state, CanonMove(tuple(coord), player, component, from_hand)))

    def replay(self, moves: List[CanonMove], seed: Optional[int] = None,
               topology: Optional[Topology] = None) -> GameState:
        """Fresh state with the given moves played through play_move"""
        state = self.new_state(topology, seed)
        for cm in moves:
            state = self.play_move(state, self.resolve(state, cm))
        return state

    def undo(self, state: GameState, k: int) -> GameState:
        """
        State before the last k moves, rebuilt by replaying from the start

        Args:
            state: Current state
            k: Number of moves to take back
        """
        n = len(state.trial.moves)
        if not 0 <= k <= n:
            raise ValueError(f"Cannot undo {k} of {n} moves")
        history = [state.canonical_move(m) for m in state.trial.moves[:n - k]]
        return self.replay(history, state.trial.seed, state.initial_topology)
