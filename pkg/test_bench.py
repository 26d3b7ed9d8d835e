#!/usr/bin/env python3
"""
Timed benchmark harness and strategy equivalence oracles
"""
import numpy as np
import pytest

from src.bench.timed import BENCH_COLUMNS, BenchReport, run_for, run_timed_bench
from src.bench.verify import cross_strategy_equivalence, re_map_equivalence, run_all, undo_equivalence
from src.expansion.engine import ExpansionEngine
from src.expansion.strategies import Strategy
from src.game.config import bundled_games, load_game_config
from src.game.playout import playout_seed, run_playout


def test_report_rates():
    report = BenchReport('g', Strategy.PERI_MAP, True, 1, 2.0, 10, 500, 7)
    assert report.playouts_per_sec == 5.0
    assert report.moves_per_sec == 250.0
    row = report.to_row()
    assert list(row) == BENCH_COLUMNS
    assert row['strategy'] == 'PERI-MAP'
    assert row['playouts_per_sec'] == '5.000'


def test_run_for_completes_at_least_one_playout():
    config = load_game_config('freeplace-hexagon').with_move_cap(10)
    playouts, moves, elapsed = run_for(config, Strategy.ZONE_MAP, 0.01, seed=1)
    assert playouts >= 1
    assert moves == 10 * playouts
    assert elapsed >= 0.01


def test_no_reset_reuses_the_board():
    config = load_game_config('freeplace-square').with_move_cap(10)
    playouts, moves, _ = run_for(config, Strategy.PERI_MAP, 0.05, seed=1, reset=False)
    assert moves == 10 * playouts


def test_timed_bench_reports_every_strategy():
    config = load_game_config('andantino-hexagon').with_move_cap(10)
    seen = []
    reports = run_timed_bench(config, [Strategy.BASE, Strategy.ZONE_RE], 0.01, seed=3, progress=seen.append)
    assert [r.strategy for r in reports] == [Strategy.BASE, Strategy.ZONE_RE]
    assert seen == reports
    assert all(r.game == 'andantino-hexagon' and r.total_playouts >= 1 for r in reports)


def test_timed_bench_rejects_bad_arguments():
    config = load_game_config('freeplace-square')
    with pytest.raises(ValueError):
        run_timed_bench(config, [Strategy.BASE], 0, seed=1)
    with pytest.raises(ValueError):
        run_timed_bench(config, [Strategy.BASE], 1, seed=1, workers=0)


@pytest.mark.slow
def test_timed_bench_with_workers():
    config = load_game_config('freeplace-triangle').with_move_cap(10)
    [report] = run_timed_bench(config, [Strategy.PERI_MAP], 0.5, seed=3, workers=2)
    assert report.workers == 2
    assert report.total_playouts >= 2


def test_each_playout_records_its_own_seed():
    config = load_game_config('freeplace-hexagon').with_move_cap(8)
    engine = ExpansionEngine(config, Strategy.ZONE_MAP)
    finished = []
    playouts, _, _ = run_for(config, Strategy.ZONE_MAP, 0.01, seed=5, worker=1, on_playout=finished.append)
    assert len(finished) == playouts
    seeds = [s.trial.seed for s in finished]
    assert seeds[0] == playout_seed(5, 1, 0)
    assert len(set(seeds)) == len(seeds)
    for state in finished[:3]:
        again = run_playout(engine, np.random.default_rng(state.trial.seed), state.trial.seed)
        assert again.trial.moves == state.trial.moves


@pytest.mark.slow
def test_expanding_strategies_outpace_base():
    config = load_game_config('andantino-square')
    reports = {r.strategy: r for r in run_timed_bench(config, list(Strategy), 3, seed=3)}
    base = reports[Strategy.BASE].playouts_per_sec
    for strategy in Strategy.expanding():
        assert reports[strategy].playouts_per_sec >= 2 * base


@pytest.mark.slow
def test_reusing_the_base_board_is_much_faster():
    config = load_game_config('andantino-square')
    [reset] = run_timed_bench(config, [Strategy.BASE], 3, seed=3)
    [reuse] = run_timed_bench(config, [Strategy.BASE], 3, seed=3, reset=False)
    assert reuse.playouts_per_sec >= 50 * reset.playouts_per_sec


@pytest.mark.parametrize("game", ['andantino-hexagon', 'andantino-square-vertex', 'freeplace-triangle'])
def test_oracles_pass(game):
    config = load_game_config(game)
    for result in run_all(config, seeds=2, move_cap=25):
        assert result.passed, result.failures


def test_oracles_on_every_bundled_game():
    for game in bundled_games():
        config = load_game_config(game)
        assert re_map_equivalence(config, seeds=1, move_cap=12).passed
        assert cross_strategy_equivalence(config, seeds=1, move_cap=12).passed
        assert undo_equivalence(config, seeds=1, move_cap=12).passed


@pytest.mark.slow
def test_oracle_sweep():
    for game in bundled_games():
        for result in run_all(load_game_config(game), seeds=100):
            assert result.passed, result.failures
