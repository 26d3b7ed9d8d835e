#!/usr/bin/env python3
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from config.board_config import (
    BENCH_SECONDS, BENCH_SEED, DEFAULT_OUTPUT_DIR, OUTPUT_DIR_ENV, SCENARIO_MAX_MOVES, VERIFY_MOVE_CAP,
    VERIFY_SEEDS,
)
from src.bench.growth import GROWTH_COLUMNS, growth_rows, write_csv
from src.bench.scenarios import Case, generate_scenario
from src.bench.timed import BENCH_COLUMNS, run_timed_bench
from src.bench.verify import run_all
from src.errors import BoardlessError
from src.expansion.engine import ExpansionEngine
from src.expansion.strategies import Family, Strategy
from src.game.config import bundled_games, load_game_config
from src.geometry.tiling import BoardSpec, Shape
from src.geometry.topology import build_regular
from src.state.game_state import CanonMove

logger = logging.getLogger(__name__)


def output_path(name: Optional[str], default: str) -> Path:
    """Bare file names (and a missing --out) go to the output directory"""
    out_dir = Path(os.environ.get(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR))
    if name is None:
        return out_dir / default
    path = Path(name)
    return out_dir / path if path.parent == Path('.') else path


def strategy_list(text: str) -> List[Strategy]:
    try:
        return [Strategy.parse(s) for s in text.split(',') if s.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def load_script(path: Path) -> List[dict]:
    """
    Scripted moves: a JSON list of [x, y] cells or {"to": [x, y], "player": p, "component": c}
    """
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, list):
        raise ValueError(f"Move script {path} must be a JSON list")
    moves = []
    for number, entry in enumerate(data):
        if isinstance(entry, dict) and 'to' in entry:
            moves.append({'to': tuple(entry['to']), 'player': entry.get('player'),
                          'component': entry.get('component')})
        elif isinstance(entry, list) and len(entry) == 2:
            moves.append({'to': tuple(entry), 'player': None, 'component': None})
        else:
            raise ValueError(f"Move {number} in {path} is neither [x, y] nor an object with 'to'")
    return moves


def cmd_growth(args) -> int:
    scenario = generate_scenario(args.shape, args.family, args.case, args.moves)
    print(f"Growth: {args.shape.value} {args.family.value} {args.case.value}, {args.moves} moves")
    rows = growth_rows(scenario, include_base=not args.no_base)

    out = output_path(args.out, f"growth_{args.shape.value}_{args.family.value}_{args.case.value}.csv")
    write_csv(out, GROWTH_COLUMNS, rows)
    final = [r for r in rows if r['strategy'] != Strategy.BASE.value][-1]
    print(f"✓ {final['strategy']} move {final['move']}: {final['board_cells']} cells, "
          f"{final['unused_pct']}% unused")
    print(f"✓ Saved {len(rows)} rows to: {out}")
    return 0


def cmd_bench(args) -> int:
    config = load_game_config(args.game)
    mode = 'reset' if not args.no_reset else 'no reset'
    print(f"Bench: {config.name}, {args.seconds:g}s per strategy, {mode}, {args.workers} worker(s)")

    def progress(report):
        print(f"✓ {report.strategy.value:9s} {report.total_playouts:8d} playouts "
              f"{report.playouts_per_sec:10.2f}/s {report.moves_per_sec:12.2f} moves/s")

    reports = run_timed_bench(config, args.strategies, args.seconds, args.seed,
                              reset=not args.no_reset, workers=args.workers, progress=progress)
    out = output_path(args.out, f"bench_{config.name}.csv")
    write_csv(out, BENCH_COLUMNS, [r.to_row() for r in reports])
    print(f"✓ Saved to: {out}")
    return 0


def cmd_play(args) -> int:
    config = load_game_config(args.config)
    if args.strategy:
        config = config.with_strategy(args.strategy)
    engine = ExpansionEngine(config, check_mappings=True)
    state = engine.new_state(seed=args.seed)

    script = load_script(Path(args.script)) if args.script else []
    print(f"Play: {config.name} under {engine.strategy.value}, {len(script)} scripted moves")
    for entry in script:
        state = engine.play_at(state, entry['to'], entry['player'], entry['component'])
    print(f"✓ {len(state.trial.moves)} moves, {state.board_topology.cell_count} cells, "
          f"status {state.trial.status}")

    if args.trace:
        trace = output_path(args.trace, 'trace.jsonl')
        trace.parent.mkdir(parents=True, exist_ok=True)
        with open(trace, 'w') as f:
            for event in state.events:
                f.write(json.dumps(event.to_record()) + '\n')
        print(f"✓ {len(state.events)} expansions traced to: {trace}")

    if args.undo:
        state = engine.undo(state, args.undo)
        print(f"✓ Undid {args.undo} moves, {len(state.trial.moves)} left")

    out = output_path(args.dump, f"state_{config.name}.json")
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w') as f:
        json.dump(state.to_dict(), f, indent=2)
    print(f"✓ State saved to: {out}")
    return 0


def cmd_topology(args) -> int:
    topology = build_regular(BoardSpec(args.shape, args.dim)).precompute()
    out = output_path(args.out, f"topology_{args.shape.value}_{args.dim}.json")
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w') as f:
        json.dump(topology.to_dict(), f, indent=2)
    print(f"✓ {args.shape.value} dim {args.dim}: {topology.cell_count} cells, "
          f"{len(topology.perimeter)} on the perimeter")
    print(f"✓ Saved to: {out}")
    return 0


def cmd_verify(args) -> int:
    games = args.games or bundled_games()
    failed = 0
    for game in games:
        config = load_game_config(game)
        for result in run_all(config, args.seeds, args.moves):
            mark = '✓' if result.passed else '✗'
            print(f"{mark} {result.game:20s} {result.name:15s} {result.seeds} seeds, "
                  f"{len(result.failures)} failures")
            for failure in result.failures[:5]:
                print(f"    {failure}")
            failed += not result.passed
    print("=" * 70)
    print("All oracles passed" if not failed else f"{failed} oracle runs failed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Boardless game engine: growth scenarios, benchmarks and oracles')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    growth = sub.add_parser('growth', help='Board size along a scripted worst/best-case scenario')
    growth.add_argument('--shape', type=Shape.parse, required=True, help='square, hexagon or triangle')
    growth.add_argument('--family', type=Family.parse, required=True, help='peri or zone')
    growth.add_argument('--case', type=Case.parse, default=Case.WORST, help='worst or best')
    growth.add_argument('--moves', type=int, default=25, help=f'Number of moves (1..{SCENARIO_MAX_MOVES})')
    growth.add_argument('--no-base', action='store_true', help='Skip the fixed-board rows')
    growth.add_argument('--out', type=str, help='Output CSV')
    growth.set_defaults(func=cmd_growth)

    bench = sub.add_parser('bench', help='Timed random playouts per strategy')
    bench.add_argument('--game', type=str, required=True, help='Bundled game name or config JSON')
    bench.add_argument('--strategies', type=strategy_list, default=list(Strategy),
                       help='Comma separated, e.g. BASE,PERI-MAP,ZONE-MAP (default: all)')
    bench.add_argument('--seconds', type=float, default=BENCH_SECONDS, help='Time per strategy')
    bench.add_argument('--seed', type=int, default=BENCH_SEED)
    bench.add_argument('--no-reset', action='store_true', help='Keep the last board between playouts')
    bench.add_argument('--workers', type=int, default=1, help='Processes per strategy')
    bench.add_argument('--out', type=str, help='Output CSV')
    bench.set_defaults(func=cmd_bench)

    play = sub.add_parser('play', help='Play scripted moves and dump the state')
    play.add_argument('--config', type=str, required=True, help='Bundled game name or config JSON')
    play.add_argument('--script', type=str, help='JSON move list')
    play.add_argument('--strategy', type=Strategy.parse, help="Override the config's strategy")
    play.add_argument('--seed', type=int)
    play.add_argument('--undo', type=int, default=0, help='Moves to take back before dumping')
    play.add_argument('--trace', type=str, help='Expansion trace (JSON lines)')
    play.add_argument('--dump', type=str, help='Output state JSON')
    play.set_defaults(func=cmd_play)

    topology = sub.add_parser('topology', help='Dump a regular board')
    topology.add_argument('--shape', type=Shape.parse, required=True)
    topology.add_argument('--dim', type=int, required=True)
    topology.add_argument('--out', type=str)
    topology.set_defaults(func=cmd_topology)

    verify = sub.add_parser('verify', help='Strategy equivalence oracles')
    verify.add_argument('--seeds', type=int, default=VERIFY_SEEDS)
    verify.add_argument('--moves', type=int, default=VERIFY_MOVE_CAP, help='Move cap per playout')
    verify.add_argument('--games', type=str, nargs='*', help='Games to check (default: all bundled)')
    verify.set_defaults(func=cmd_verify)
    return parser


def cli_dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    print("=" * 70)
    print(f"BOARDLESS {args.command.upper()}")
    print("=" * 70)
    try:
        return args.func(args)
    except (BoardlessError, OSError, ValueError) as e:  # JSONDecodeError is a ValueError
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
