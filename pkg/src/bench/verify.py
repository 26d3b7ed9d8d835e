"""
Equivalence oracles between the expansion strategies
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from config.board_config import VERIFY_MOVE_CAP
from src.errors import BoardBoundsError
from src.expansion.engine import ExpansionEngine
from src.expansion.strategies import Strategy
from src.game.playout import playout_rng, run_playout
from src.game.rules import legal_moves
from src.state.game_state import CanonMove, GameState

logger = logging.getLogger(__name__)


@dataclass
class OracleResult:
    """Outcome of one oracle over a range of seeds"""
    name: str
    game: str
    seeds: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, seed: int, message: str):
        self.failures.append(f"seed {seed}: {message}")
        logger.error("%s on %s, seed %d: %s", self.name, self.game, seed, message)


def _canonical_history(state: GameState) -> List[CanonMove]:
    return [state.canonical_move(m) for m in state.trial.moves]


def _reference_game(config, seed: int, strategy: Strategy = Strategy.ZONE_MAP) -> GameState:
    engine = ExpansionEngine(config, strategy, check_mappings=True)
    return run_playout(engine, playout_rng(seed, 0), seed)


def _state_mismatch(a: GameState, b: GameState) -> Optional[str]:
    """First difference between two states of the same game, None if identical"""
    if a.board_topology != b.board_topology:
        return "board topologies differ"
    if a.snapshot_tables() != b.snapshot_tables():
        return "container chunks differ"
    if a.owned_report() != b.owned_report():
        return "owned registries differ"
    if a.trial.moves != b.trial.moves:
        return "trial move lists differ"
    if a.trial.status != b.trial.status:
        return f"status {a.trial.status} vs {b.trial.status}"
    return None


def re_map_equivalence(config, seeds: int, move_cap: int = VERIFY_MOVE_CAP) -> OracleResult:
    """
    Play each game under the MAP and RE variant of both families side by side
    and require identical states after every move

    Args:
        config: GameConfig
        seeds: Number of seeds (0..seeds-1)
        move_cap: Move cap applied to every game
    """
    config = config.with_move_cap(move_cap)
    result = OracleResult('re-map', config.name, seeds)

    for seed in range(seeds):
        history = _canonical_history(_reference_game(config, seed))
        for mapped, replayed in ((Strategy.PERI_MAP, Strategy.PERI_RE), (Strategy.ZONE_MAP, Strategy.ZONE_RE)):
            map_engine = ExpansionEngine(config, mapped, check_mappings=True)
            re_engine = ExpansionEngine(config, replayed, check_mappings=True)
            a, b = map_engine.new_state(seed=seed), re_engine.new_state(seed=seed)
            for number, cm in enumerate(history, 1):
                a = map_engine.play_move(a, map_engine.resolve(a, cm))
                b = re_engine.play_move(b, re_engine.resolve(b, cm))
                try:
                    a.check_invariants()
                    b.check_invariants()
                except AssertionError as e:
                    result.fail(seed, f"{mapped.value}/{replayed.value} move {number}: {e}")
                    break
                problem = _state_mismatch(a, b)
                if problem:
                    result.fail(seed, f"{mapped.value}/{replayed.value} move {number}: {problem}")
                    break
    return result


def cross_strategy_equivalence(config, seeds: int, move_cap: int = VERIFY_MOVE_CAP,
                               strategies: Sequence[Strategy] = tuple(Strategy)) -> OracleResult:
    """
    Replay a ZONE-MAP game under every strategy and require the same occupied
    cells and outcome after every move

    BASE stops at the first move off its fixed board. Its unused percentage
    must never increase.
    """
    config = config.with_move_cap(move_cap)
    result = OracleResult('cross-strategy', config.name, seeds)

    for seed in range(seeds):
        reference = ExpansionEngine(config, Strategy.ZONE_MAP, check_mappings=True)
        ref_state = reference.new_state(seed=seed)
        history, expected = [], []
        rng = playout_rng(seed, 0)
        while not ref_state.trial.ended:
            moves = legal_moves(ref_state)
            if not moves:
                break
            ref_state = reference.play_move(ref_state, moves[int(rng.integers(len(moves)))])
            history.append(ref_state.canonical_move(ref_state.trial.moves[-1]))
            expected.append((ref_state.occupied_triples(), ref_state.trial.status))

        for strategy in strategies:
            engine = ExpansionEngine(config, strategy, check_mappings=True)
            state = engine.new_state(seed=seed)
            unused = state.unused_pct
            for number, (cm, (triples, status)) in enumerate(zip(history, expected), 1):
                try:
                    state = engine.play_move(state, engine.resolve(state, cm))
                except BoardBoundsError:
                    if strategy is not Strategy.BASE:
                        result.fail(seed, f"{strategy.value} move {number} left the board")
                    break
                if state.occupied_triples() != triples:
                    result.fail(seed, f"{strategy.value} move {number}: occupied cells differ")
                    break
                if state.trial.status != status:
                    result.fail(seed, f"{strategy.value} move {number}: status {state.trial.status} vs {status}")
                    break
                if strategy is Strategy.BASE:
                    if state.unused_pct > unused:
                        result.fail(seed, f"BASE unused percentage rose at move {number}")
                        break
                    unused = state.unused_pct
    return result


def undo_equivalence(config, seeds: int, move_cap: int = VERIFY_MOVE_CAP) -> OracleResult:
    """
    Undoing the last k moves and playing them again must give back the
    never-undone state, under every expanding strategy
    """
    config = config.with_move_cap(move_cap)
    result = OracleResult('undo', config.name, seeds)

    for seed in range(seeds):
        rng = np.random.default_rng(np.random.SeedSequence([seed, 1]))
        for strategy in Strategy.expanding():
            engine = ExpansionEngine(config, strategy)
            full = run_playout(engine, playout_rng(seed, 0), seed)
            history = _canonical_history(full)
            k = int(rng.integers(len(history) + 1))
            state = engine.undo(full, k)
            if len(state.trial.moves) != len(history) - k:
                result.fail(seed, f"{strategy.value} undo {k} kept {len(state.trial.moves)} moves")
                continue
            for cm in history[len(history) - k:]:
                state = engine.play_move(state, engine.resolve(state, cm))
            problem = _state_mismatch(state, full)
            if problem:
                result.fail(seed, f"{strategy.value} undo {k} and redo: {problem}")
    return result


def run_all(config, seeds: int, move_cap: int = VERIFY_MOVE_CAP) -> List[OracleResult]:
    return [
        re_map_equivalence(config, seeds, move_cap),
        cross_strategy_equivalence(config, seeds, move_cap),
        undo_equivalence(config, seeds, move_cap),
    ]
