#!/usr/bin/env python3
"""
Command-line entry point
"""
import csv
import json

from main import cli_dispatch, output_path


def read_csv(path):
    with open(path) as f:
        return list(csv.DictReader(f))


def test_growth_command(output_dir):
    assert cli_dispatch(['growth', '--shape', 'square', '--family', 'peri', '--case', 'worst',
                         '--moves', '25']) == 0
    rows = read_csv(output_dir / 'growth_square_peri_worst.csv')
    assert rows[-1]['strategy'] == 'PERI-MAP'
    assert rows[-1]['board_cells'] == '2601'
    assert rows[0]['strategy'] == 'BASE'


def test_growth_without_base(tmp_path):
    out = tmp_path / 'hex.csv'
    assert cli_dispatch(['growth', '--shape', 'hexagon', '--family', 'zone', '--case', 'best',
                         '--moves', '7', '--no-base', '--out', str(out)]) == 0
    rows = read_csv(out)
    assert {r['strategy'] for r in rows} == {'ZONE-MAP'}
    assert rows[-1]['board_cells'] == '19'


def test_bench_command(output_dir):
    assert cli_dispatch(['bench', '--game', 'freeplace-hexagon', '--strategies', 'BASE,zone_map',
                         '--seconds', '0.01', '--seed', '4', '--out', 'bench.csv']) == 0
    rows = read_csv(output_dir / 'bench.csv')
    assert [r['strategy'] for r in rows] == ['BASE', 'ZONE-MAP']
    assert all(r['seed'] == '4' and r['reset'] == 'True' for r in rows)


def test_bench_unknown_strategy(output_dir, capsys):
    assert cli_dispatch(['bench', '--game', 'freeplace-hexagon', '--strategies', 'RING-MAP']) == 2
    assert 'usage' in capsys.readouterr().err


def test_unknown_game(output_dir, capsys):
    assert cli_dispatch(['bench', '--game', 'chess', '--seconds', '0.01']) == 1
    assert 'Error:' in capsys.readouterr().err


def test_play_command(output_dir):
    script = output_dir / 'moves.json'
    script.write_text(json.dumps([[0, 0], [1, 0], {'to': [1, -1], 'player': 1, 'component': 2}]))
    assert cli_dispatch(['play', '--config', 'andantino-hexagon', '--script', str(script),
                         '--dump', 'state.json', '--trace', 'trace.jsonl']) == 0
    dump = json.loads((output_dir / 'state.json').read_text())
    assert dump['game'] == 'andantino-hexagon'
    assert len(dump['trial']['moves']) == 3
    assert sorted(tuple(c['coord']) for c in dump['board']['occupied']) == [(0, 0), (1, -1), (1, 0)]
    trace = (output_dir / 'trace.jsonl').read_text().splitlines()
    assert json.loads(trace[0])['strategy'] == 'PERI-MAP'


def test_play_with_undo(output_dir):
    script = output_dir / 'moves.json'
    script.write_text(json.dumps([[0, 0], [1, 0], [1, -1]]))
    assert cli_dispatch(['play', '--config', 'andantino-hexagon', '--strategy', 'ZONE-RE',
                         '--script', str(script), '--undo', '2', '--dump', 'undone.json']) == 0
    dump = json.loads((output_dir / 'undone.json').read_text())
    assert dump['strategy'] == 'ZONE-RE'
    assert [m['to'] for m in dump['trial']['moves']] == [dump['board']['occupied'][0]['site']]


def test_play_illegal_script(output_dir, capsys):
    script = output_dir / 'bad.json'
    script.write_text(json.dumps([[0, 0], [0, 0]]))
    assert cli_dispatch(['play', '--config', 'freeplace-square', '--script', str(script)]) == 1
    assert 'Error:' in capsys.readouterr().err


def test_play_malformed_script(output_dir):
    script = output_dir / 'bad.json'
    script.write_text('{"to": [0, 0]}')
    assert cli_dispatch(['play', '--config', 'freeplace-square', '--script', str(script)]) == 1
    script.write_text('[[0, 0], ')
    assert cli_dispatch(['play', '--config', 'freeplace-square', '--script', str(script)]) == 1


def test_topology_command(output_dir):
    assert cli_dispatch(['topology', '--shape', 'hexagon', '--dim', '2']) == 0
    dump = json.loads((output_dir / 'topology_hexagon_2.json').read_text())
    assert dump['cell_count'] == 7
    assert dump['vertex_count'] == 24
    assert dump['edge_count'] == 30


def test_verify_command(capsys):
    assert cli_dispatch(['verify', '--seeds', '1', '--moves', '10', '--games', 'andantino-hexagon']) == 0
    out = capsys.readouterr().out
    assert 'All oracles passed' in out


def test_missing_subcommand():
    assert cli_dispatch([]) == 2


def test_output_path(output_dir, tmp_path):
    assert output_path(None, 'x.csv') == output_dir / 'x.csv'
    assert output_path('y.csv', 'x.csv') == output_dir / 'y.csv'
    nested = tmp_path / 'sub' / 'z.csv'
    assert output_path(str(nested), 'x.csv') == nested
