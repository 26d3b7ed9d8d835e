"""
Carrying a game state onto an expanded board: direct mapping (MAP) or reset and replay (RE)
"""
import logging

from src.errors import IllegalMoveError, ReplayError
from src.expansion.strategies import IndexMapping
from src.game.rules import refresh_playable
from src.geometry.topology import Topology
from src.state.game_state import GameState

logger = logging.getLogger(__name__)


def _check_sizes(state: GameState, new_topology: Topology, mapping: IndexMapping):
    if mapping.old_count != state.board_topology.cell_count:
        raise ValueError(f"Mapping covers {mapping.old_count} cells, board has {state.board_topology.cell_count}")
    if mapping.new_count != new_topology.cell_count:
        raise ValueError(f"Mapping targets {mapping.new_count} cells, new board has {new_topology.cell_count}")


def migrate_state_map(state: GameState, new_topology: Topology, mapping: IndexMapping) -> GameState:
    """
    Remap chunks, ownership and trial moves onto the new board in place

    Args:
        state: State on the old board
        new_topology: Expanded board
        mapping: Old cell id -> new cell id

    Returns:
        The same state object, now on the new board
    """
    _check_sizes(state, new_topology, mapping)
    remap = state.site_remapper(mapping.old_to_new, mapping.new_count)

    # Old sites first, then the added sites join empty via the fresh arrays
    board = state.board_state.remapped(mapping.old_to_new, mapping.new_count)
    state.owned = state.owned.remapped(remap)
    state.trial.moves = [m.remapped(remap) for m in state.trial.moves]
    state.initial_sites = [(int(mapping.old_to_new[s]), comp, owner) for s, comp, owner in state.initial_sites]
    state.set_board(new_topology, board)
    refresh_playable(state)
    return state


def migrate_state_replay(state: GameState, new_topology: Topology, mapping: IndexMapping) -> GameState:
    """
    Reset to the initial tiles on the new board and re-apply every move

    Args:
        state: State on the old board
        new_topology: Expanded board
        mapping: Old cell id -> new cell id

    Returns:
        A new state on the new board
    """
    _check_sizes(state, new_topology, mapping)
    remap = state.site_remapper(mapping.old_to_new, mapping.new_count)

    fresh = GameState(state.config, new_topology, state.trial.seed, state.initial_topology)
    fresh.place_initial([(int(mapping.old_to_new[s]), comp, owner) for s, comp, owner in state.initial_sites])

    for number, move in enumerate(state.trial.moves):
        try:
            fresh.apply_move(move.remapped(remap), check_playable=False)
        except IllegalMoveError as e:
            raise ReplayError(f"Move {number} could not be re-applied after expansion: {e}") from e

    fresh.events = state.events
    fresh.trial.status = state.trial.status
    fresh.winner = state.winner
    refresh_playable(fresh)
    logger.debug("replayed %d moves on %d cells", len(state.trial.moves), new_topology.cell_count)
    return fresh
