"""
Uniform random playouts
"""
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.expansion.engine import ExpansionEngine
from src.game.rules import legal_moves
from src.geometry.topology import Topology
from src.state.game_state import GameState


@dataclass
class PlayoutResult:
    """Summary of one simulated game"""
    seed: Optional[int]
    moves: int
    status: str
    winner: Optional[int]
    board_cells: int
    occupied: int
    expansions: int
    events: List = field(default_factory=list, repr=False)
    state: Optional[GameState] = field(default=None, repr=False)

    @property
    def unused_pct(self) -> float:
        return (self.board_cells - self.occupied) / self.board_cells * 100


def playout_rng(base_seed: int, index: int) -> np.random.Generator:
    """Independent random stream for playout number index"""
    return np.random.default_rng(np.random.SeedSequence([base_seed, index]))


def playout_seed(base_seed: int, *index: int) -> int:
    """Seed of one playout in a family of streams; default_rng(seed) reproduces the playout"""
    return int(np.random.SeedSequence([base_seed, *index]).generate_state(1)[0])


def run_playout(engine: ExpansionEngine, rng: np.random.Generator, seed: Optional[int] = None,
                topology: Optional[Topology] = None, after_move=None) -> GameState:
    """
    Play uniformly random legal moves until the game ends

    Args:
        engine: Engine holding config and strategy
        rng: Random generator driving move choice
        seed: Seed recorded in the trial
        topology: Start board; a fresh one is built when omitted
        after_move: Optional callback(state) run after every move

    Returns:
        Final state
    """
    state = engine.new_state(topology, seed)
    while not state.trial.ended:
        moves = legal_moves(state)
        if not moves:
            state.trial.end('no-moves')
            break
        state = engine.play_move(state, moves[int(rng.integers(len(moves)))])
        if after_move is not None:
            after_move(state)
    return state


def summarize(state: GameState, keep_state: bool = False) -> PlayoutResult:
    return PlayoutResult(
        seed=state.trial.seed,
        moves=len(state.trial.moves),
        status=state.trial.status,
        winner=state.winner,
        board_cells=state.board_topology.cell_count,
        occupied=state.occupied_count,
        expansions=len(state.events),
        events=list(state.events),
        state=state if keep_state else None,
    )


def random_playout(config, seed: int, strategy=None, keep_state: bool = False) -> PlayoutResult:
    """
    One random playout on a freshly reset board

    Args:
        config: GameConfig
        seed: Seed of the move choices
        strategy: Overrides the config's strategy
        keep_state: Attach the final state to the result
    """
    engine = ExpansionEngine(config, strategy)
    state = run_playout(engine, np.random.default_rng(seed), seed)
    return summarize(state, keep_state)
