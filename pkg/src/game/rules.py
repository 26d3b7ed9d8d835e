"""
Placement rules, legal moves and win detection for boardless placement games
"""
from typing import List

import numpy as np

from src.errors import ConfigError
from src.game.config import ADJACENT_AT_LEAST, EDGE, LINE_OF_N
from src.geometry.tiling import line_axes
from src.state.game_state import GameState, Move


def legal_sites(state: GameState) -> np.ndarray:
    """
    Board sites where the placement rule currently allows a piece

    Returns:
        Ascending site ids, which is canonical coordinate order
    """
    config = state.config
    cs = state.board_state
    occupied = cs.occupied()

    if len(occupied) == 0:
        if config.opening == 'origin':
            origin = state.board_topology.id_of((0, 0))
            return np.array([] if origin is None else [origin], dtype=np.int64)
        return np.flatnonzero(cs.empty)

    if config.placement.rule != ADJACENT_AT_LEAST:
        return np.flatnonzero(cs.empty)

    required = config.placement.k
    if len(state.trial.moves) < config.bootstrap_moves:
        required = min(required, len(occupied))

    touching = np.zeros(cs.site_count, dtype=np.int32)
    topology = state.board_topology
    adjacency = topology.edge_adjacency if config.placement.relation == EDGE else topology.vertex_adjacency
    for site in occupied:
        for near in adjacency[site]:
            touching[near] += 1
    return np.flatnonzero(cs.empty & (touching >= required))


def refresh_playable(state: GameState):
    """Rewrite the board's playable chunk from the placement rule"""
    state.board_state.set_playable(legal_sites(state))


def legal_moves(state: GameState, player: int = None) -> List[Move]:
    """
    Moves of the given player (default: the player to move)

    Ordered by target cell in canonical order, then by component index.
    """
    player = state.mover if player is None else player
    components = state.available_components(player)
    if not components:
        return []
    sources = {comp: state.hand_site(player, comp) for comp in components}
    sites = np.flatnonzero(state.board_state.playable)
    return [Move(int(site), player, comp, sources[comp]) for site in sites for comp in components]


def _run_length(state: GameState, start, step, player: int) -> int:
    """Consecutive cells of the player from start (exclusive) along step"""
    topo, cs = state.board_topology, state.board_state
    x, y = start
    dx, dy = step
    length = 0
    while True:
        x, y = x + dx, y + dy
        site = topo.index.get((x, y))
        if site is None or cs.empty[site] or cs.who[site] != player:
            return length
        length += 1


def line_through(state: GameState, site: int, n: int, player: int) -> bool:
    """Whether the player's piece on site completes n in a row"""
    c = state.board_topology.coords[site]
    for dx, dy in line_axes(state.config.shape):
        total = 1 + _run_length(state, c, (dx, dy), player) + _run_length(state, c, (-dx, -dy), player)
        if total >= n:
            return True
    return False


def detect_line(state: GameState, n: int, player: int) -> bool:
    """
    Whether the player owns n consecutive cells along a straight lattice axis

    Args:
        state: Game state
        n: Line length (>= 2)
        player: Owner index
    """
    if n < 2:
        raise ValueError(f"Line length must be >= 2, got {n}")
    try:
        axes = line_axes(state.config.shape)
    except ValueError as e:
        raise ConfigError(str(e)) from None

    topo, cs = state.board_topology, state.board_state
    own = [s for s in cs.occupied() if cs.who[s] == player]
    for site in own:
        c = topo.coords[site]
        for dx, dy in axes:
            before = topo.index.get((c[0] - dx, c[1] - dy))
            if before is not None and not cs.empty[before] and cs.who[before] == player:
                continue  # not the start of a run
            if 1 + _run_length(state, c, (dx, dy), player) >= n:
                return True
    return False


def update_status(state: GameState, last: Move):
    """End the trial on a win, the move cap, or a mover without moves"""
    config = state.config
    if config.win.rule == LINE_OF_N and line_through(state, last.to, config.win.n, last.player):
        state.winner = last.player
        state.trial.end(f"win:{last.player}")
    elif len(state.trial.moves) >= config.move_cap:
        state.trial.end('cap')
    elif not state.board_state.playable.any() or not state.available_components(state.mover):
        state.trial.end('no-moves')
