"""
Board size and unused-cell metrics along a growth scenario
"""
import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from config.board_config import SCENARIO_MAX_MOVES
from src.bench.scenarios import GrowthScenario
from src.errors import BoardBoundsError
from src.expansion.engine import ExpansionEngine
from src.expansion.strategies import Strategy
from src.game.config import GameConfig
from src.geometry.tiling import BoardSpec, Shape
from src.geometry.topology import build_regular

logger = logging.getLogger(__name__)

GROWTH_COLUMNS = ['shape', 'family', 'case', 'strategy', 'move', 'board_cells', 'occupied_cells', 'unused_pct']


@dataclass(frozen=True)
class MetricSample:
    move_index: int
    board_cells: int
    occupied_cells: int

    @property
    def unused_pct(self) -> float:
        return (self.board_cells - self.occupied_cells) / self.board_cells * 100


def growth_config(shape: Shape) -> GameConfig:
    """Free placement on any empty cell, the rule every scenario is legal under"""
    return GameConfig(name=f'growth-{shape.value}', shape=shape, move_cap=SCENARIO_MAX_MOVES)


def run_growth(scenario: GrowthScenario, strategy: Optional[Strategy] = None) -> List[MetricSample]:
    """
    Play a scenario and sample the board after every move

    Args:
        scenario: Scripted moves
        strategy: Defaults to the MAP variant of the scenario's family; BASE
            plays on its fixed board and stops at the first move outside it

    Returns:
        One sample per played move
    """
    strategy = strategy or Strategy.for_family(scenario.family)
    engine = ExpansionEngine(growth_config(scenario.shape), strategy)
    start = None if strategy is Strategy.BASE else build_regular(BoardSpec(scenario.shape, 1))
    state = engine.new_state(start)

    samples = []
    for number, coord in enumerate(scenario.moves, 1):
        try:
            state = engine.play_at(state, coord)
        except BoardBoundsError:
            logger.warning("%s %s: move %d at %s leaves the fixed board, stopping",
                           strategy.value, scenario.shape.value, number, coord)
            break
        samples.append(MetricSample(number, state.board_topology.cell_count, state.occupied_count))
    return samples


def growth_rows(scenario: GrowthScenario, include_base: bool = True) -> List[Dict[str, object]]:
    """CSV rows: BASE first (optional), then the scenario's family strategy"""
    strategies = [Strategy.BASE] if include_base else []
    strategies.append(Strategy.for_family(scenario.family))

    rows = []
    for strategy in strategies:
        for sample in run_growth(scenario, strategy):
            rows.append({
                'shape': scenario.shape.value,
                'family': scenario.family.value,
                'case': scenario.case.value,
                'strategy': strategy.value,
                'move': sample.move_index,
                'board_cells': sample.board_cells,
                'occupied_cells': sample.occupied_cells,
                'unused_pct': f"{sample.unused_pct:.4f}",
            })
    return rows


def write_csv(path: Path, columns: List[str], rows: List[Dict[str, object]]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
