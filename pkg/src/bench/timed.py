"""
Timed random-playout throughput benchmark
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.expansion.engine import ExpansionEngine
from src.expansion.strategies import Strategy
from src.game.playout import playout_seed, run_playout
from src.geometry.topology import build_regular
from src.state.game_state import GameState

BENCH_COLUMNS = ['game', 'strategy', 'reset', 'workers', 'seconds', 'total_playouts', 'total_moves',
                 'playouts_per_sec', 'moves_per_sec', 'seed']


@dataclass
class BenchReport:
    """Throughput of one strategy on one game"""
    game: str
    strategy: Strategy
    reset: bool
    workers: int
    seconds: float  # measured wall time
    total_playouts: int
    total_moves: int
    seed: int

    @property
    def playouts_per_sec(self) -> float:
        return self.total_playouts / self.seconds if self.seconds > 0 else 0.0

    @property
    def moves_per_sec(self) -> float:
        return self.total_moves / self.seconds if self.seconds > 0 else 0.0

    def to_row(self) -> dict:
        return {
            'game': self.game,
            'strategy': self.strategy.value,
            'reset': self.reset,
            'workers': self.workers,
            'seconds': f"{self.seconds:.3f}",
            'total_playouts': self.total_playouts,
            'total_moves': self.total_moves,
            'playouts_per_sec': f"{self.playouts_per_sec:.3f}",
            'moves_per_sec': f"{self.moves_per_sec:.3f}",
            'seed': self.seed,
        }


def run_for(config, strategy: Strategy, seconds: float, seed: int, reset: bool = True,
            worker: int = 0, on_playout: Optional[Callable[[GameState], None]] = None) -> Tuple[int, int, float]:
    """
    Run playouts back to back until the wall clock expires

    The playout in flight at expiry completes and counts.

    Args:
        config: GameConfig
        strategy: Strategy under test
        seconds: Time budget
        seed: Base seed; playout i of worker w plays and records playout_seed(seed, w, i)
        reset: Build a fresh start board for every playout
        worker: Worker number
        on_playout: Optional callback(state) run on every finished playout

    Returns:
        (playouts, moves, elapsed seconds)
    """
    engine = ExpansionEngine(config, strategy)
    board = None
    playouts = moves = 0
    start = time.perf_counter()
    deadline = start + seconds

    while True:
        if reset or board is None:
            board = build_regular(engine.initial_spec()).precompute()
        own_seed = playout_seed(seed, worker, playouts)
        state = run_playout(engine, np.random.default_rng(own_seed), own_seed, board)
        if not reset:
            board = state.board_topology
        playouts += 1
        moves += len(state.trial.moves)
        if on_playout is not None:
            on_playout(state)
        if time.perf_counter() >= deadline:
            break

    return playouts, moves, time.perf_counter() - start


def _worker(args) -> Tuple[int, int, float]:
    return run_for(*args)


def run_timed_bench(config, strategies: Sequence[Strategy], seconds: float, seed: int,
                    reset: bool = True, workers: int = 1,
                    progress: Optional[Callable[[BenchReport], None]] = None) -> List[BenchReport]:
    """
    Benchmark each strategy in turn on the same game

    Args:
        config: GameConfig
        strategies: Strategies to compare
        seconds: Time budget per strategy
        seed: Base seed
        reset: Reset board and state between playouts
        workers: Processes per strategy (1 = in-process)
        progress: Called with each finished report
    """
    if seconds <= 0:
        raise ValueError(f"Bench duration must be > 0, got {seconds}")
    if workers < 1:
        raise ValueError(f"Worker count must be >= 1, got {workers}")

    reports = []
    for strategy in strategies:
        if workers == 1:
            playouts, moves, elapsed = run_for(config, strategy, seconds, seed, reset)
        else:
            jobs = [(config, strategy, seconds, seed, reset, w) for w in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_worker, jobs))
            playouts = sum(r[0] for r in results)
            moves = sum(r[1] for r in results)
            elapsed = max(r[2] for r in results)

        report = BenchReport(config.name, strategy, reset, workers, elapsed, playouts, moves, seed)
        reports.append(report)
        if progress is not None:
            progress(report)
    return reports
