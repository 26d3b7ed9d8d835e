from pathlib import Path

# Fixed board sides used by the BASE strategy
BASE_DIMS = {
    'square': 41,    # 1681 cells
    'hexagon': 21,   # 1261 cells
    'triangle': 41,  # 1681 cells
}

# Starting board sides when a game has no initial tiles
INITIAL_DIMS = {
    'square': 3,
    'hexagon': 2,
    'triangle': 4,
}

# Game defaults
DEFAULT_PLAYERS = 2
DEFAULT_MOVE_CAP = 200  # Placement budget of a simulated game
DEFAULT_BOOTSTRAP_MOVES = 2  # Moves exempted from the k-adjacency rule
BOARD_COMPONENT = 1  # Component index of initial tiles

# Growth scenarios
SCENARIO_MAX_MOVES = 200

# Timed benchmark
BENCH_SECONDS = 40  # Wall clock per strategy
BENCH_SEED = 2024
VERIFY_SEEDS = 100
VERIFY_MOVE_CAP = 60  # Move cap of oracle playouts

# Files
GAMES_DIR = Path(__file__).resolve().parent / 'games'
OUTPUT_DIR_ENV = 'BOARDLESS_OUTPUT_DIR'
DEFAULT_OUTPUT_DIR = 'data/output'
