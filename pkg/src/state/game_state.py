"""
Game state: containers with global site indexing, ownership registry and trial
"""
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from src.errors import IllegalMoveError
from src.geometry.tiling import CanonCoord, Shape
from src.geometry.topology import Topology, build_from_cells
from src.state.container_state import ContainerState
from src.state.owned import OwnedRegistry

IN_PROGRESS = 'in-progress'


@dataclass(frozen=True)
class Move:
    """A placement, optionally taken from a hand site"""
    to: int
    player: int
    component: int
    from_site: Optional[int] = None
    edge: bool = False

    def remapped(self, remap_site: Callable[[int], int]) -> 'Move':
        return replace(self, to=remap_site(self.to),
                       from_site=None if self.from_site is None else remap_site(self.from_site))

    def to_dict(self) -> dict:
        data = asdict(self)
        data['from'] = data.pop('from_site')
        return data


@dataclass(frozen=True)
class CanonMove:
    """A move named by lattice coordinate instead of site id"""
    to: CanonCoord
    player: int
    component: int
    from_hand: bool = False


@dataclass
class Trial:
    seed: Optional[int] = None
    moves: List[Move] = field(default_factory=list)
    status: str = IN_PROGRESS

    @property
    def ended(self) -> bool:
        return self.status != IN_PROGRESS

    def end(self, reason: str):
        self.status = f"ended:{reason}"


@dataclass(frozen=True)
class Container:
    """The main board or one player's hand"""
    index: int
    role: str  # 'board' or 'hand'
    player: int
    topology: Topology
    components: Tuple[int, ...] = ()  # hand only: component held by each site

    @property
    def name(self) -> str:
        return 'Board' if self.role == 'board' else f'Hand{self.player}'

    @property
    def site_count(self) -> int:
        return self.topology.cell_count


class GameState:
    """Containers, their chunk states, the owned registry and the trial"""

    def __init__(self, config, board_topology: Topology, seed: Optional[int] = None,
                 initial_topology: Optional[Topology] = None):
        """
        Args:
            config: GameConfig the state is played under
            board_topology: Topology of the main board
            seed: Seed recorded in the trial
            initial_topology: Board a fresh game starts from (defaults to board_topology)
        """
        self.config = config
        self.containers: List[Container] = [Container(0, 'board', 0, board_topology)]
        self.states: List[ContainerState] = [ContainerState(board_topology.cell_count)]
        self.owned = OwnedRegistry()
        self.trial = Trial(seed)
        self.initial_topology = initial_topology or board_topology
        self.initial_sites: List[Tuple[int, int, int]] = []  # (board site, component, owner)
        self.events: List = []
        self.winner: Optional[int] = None

        for player in range(1, config.players + 1):
            held = tuple(c.index for c in config.hand_components(player))
            if held:
                hand_cells = [(i, 0) for i in range(len(held))]
                hand = Container(len(self.containers), 'hand', player,
                                 build_from_cells(Shape.SQUARE, hand_cells), held)
                self.containers.append(hand)
                self.states.append(ContainerState(len(held)))
        self._fill_hands()

    def _fill_hands(self):
        for container in self.containers[1:]:
            cs = self.states[container.index]
            for local, component in enumerate(container.components):
                amount = next(c.hand for c in self.config.components if c.index == component)
                if amount > 0:
                    cs.place(local, component, container.player, amount, check_playable=False, stack=True)
                    self.owned.add(container.player, component, self.global_site(container.index, local))

    # Containers and indexing

    @property
    def board(self) -> Container:
        return self.containers[0]

    @property
    def board_topology(self) -> Topology:
        return self.containers[0].topology

    @property
    def board_state(self) -> ContainerState:
        return self.states[0]

    def set_board(self, topology: Topology, cs: ContainerState):
        self.containers[0] = replace(self.containers[0], topology=topology)
        self.states[0] = cs

    def offset(self, container_index: int) -> int:
        return sum(c.site_count for c in self.containers[:container_index])

    def global_site(self, container_index: int, local: int) -> int:
        return self.offset(container_index) + local

    def locate(self, site: int) -> Tuple[int, int]:
        """Global site -> (container index, local site)"""
        start = 0
        for container in self.containers:
            if site < start + container.site_count:
                if site < start:
                    break
                return container.index, site - start
            start += container.site_count
        raise IllegalMoveError(f"Global site {site} does not exist")

    def site_remapper(self, old_to_new: np.ndarray, new_board_count: int) -> Callable[[int], int]:
        """Remap global sites for a board growing through old_to_new"""
        old_count = self.board_topology.cell_count
        shift = new_board_count - old_count

        def remap(site: int) -> int:
            return int(old_to_new[site]) if site < old_count else site + shift

        return remap

    def hand_site(self, player: int, component: int) -> Optional[int]:
        """Global site of a player's hand holding the component type"""
        for container in self.containers[1:]:
            if container.player == player and component in container.components:
                return self.global_site(container.index, container.components.index(component))
        return None

    def hand_count(self, player: int, component: int) -> Optional[int]:
        """Pieces left in hand, None when the supply is unlimited"""
        site = self.hand_site(player, component)
        if site is None:
            return None
        ci, local = self.locate(site)
        return int(self.states[ci].count[local])

    def available_components(self, player: int) -> List[int]:
        """Component types the player can still place"""
        found = []
        for spec in self.config.player_components(player):
            left = self.hand_count(player, spec.index)
            if spec.hand is None or (left is not None and left > 0):
                found.append(spec.index)
        return found

    @property
    def mover(self) -> int:
        return len(self.trial.moves) % self.config.players + 1

    # Applying moves

    def place_initial(self, sites: List[Tuple[int, int, int]]):
        """Put initial tiles on board sites"""
        for site, component, owner in sites:
            self.board_state.place(site, component, owner, check_playable=False)
            self.owned.add(owner, component, site)
            self.initial_sites.append((site, component, owner))

    def apply_move(self, move: Move, check_playable: bool = True, record: bool = True):
        """
        Apply a move to the containers and the registry

        Args:
            move: Move with global site indices
            check_playable: Require the target in the board's playable chunk
            record: Append the move to the trial
        """
        ci, local_to = self.locate(move.to)
        if ci != 0:
            raise IllegalMoveError(f"Move target {move.to} is not a board site")

        if move.from_site is not None:
            hi, local_from = self.locate(move.from_site)
            cs = self.states[hi]
            if cs.empty[local_from] or cs.what[local_from] != move.component or cs.who[local_from] != move.player:
                raise IllegalMoveError(
                    f"Site {move.from_site} holds no component {move.component} of player {move.player}")
        elif self.hand_site(move.player, move.component) is not None:
            raise IllegalMoveError(f"Component {move.component} must be taken from player {move.player}'s hand")
        elif all(c.index != move.component for c in self.config.player_components(move.player)):
            raise IllegalMoveError(f"Player {move.player} does not own component {move.component}")

        self.board_state.place(local_to, move.component, move.player, check_playable=check_playable)
        self.owned.add(move.player, move.component, move.to)

        if move.from_site is not None:
            self.states[hi].remove(local_from)
            if self.states[hi].empty[local_from]:
                self.owned.discard(move.player, move.component, move.from_site)

        if record:
            self.trial.moves.append(move)

    def canonical_move(self, move: Move) -> CanonMove:
        return CanonMove(self.board_topology.coord_of(move.to), move.player, move.component,
                         move.from_site is not None)

    # Reports

    def declared_components(self) -> Dict[int, List[int]]:
        return {owner: [c.index for c in self.config.player_components(owner)]
                for owner in range(0, self.config.players + 1)}

    def snapshot_tables(self) -> Dict[str, dict]:
        return {c.name: self.states[c.index].table() for c in self.containers}

    def owned_report(self) -> Dict[str, List[List[int]]]:
        names = {0: 'Board'}
        names.update({p: f'Player{p}' for p in range(1, self.config.players + 1)})
        return self.owned.report(self.declared_components(), names)

    def occupied_triples(self) -> Set[Tuple[CanonCoord, int, int]]:
        """(coordinate, component, owner) of every occupied board cell"""
        cs, topo = self.board_state, self.board_topology
        return {(topo.coords[s], int(cs.what[s]), int(cs.who[s])) for s in cs.occupied()}

    @property
    def occupied_count(self) -> int:
        return int(np.count_nonzero(~self.board_state.empty))

    @property
    def unused_pct(self) -> float:
        cells = self.board_topology.cell_count
        return (cells - self.occupied_count) / cells * 100

    def check_invariants(self):
        """Raise AssertionError if chunks or registry are incoherent"""
        for cs in self.states:
            cs.check_invariants()
        rebuilt = OwnedRegistry.from_chunks((self.offset(c.index), self.states[c.index]) for c in self.containers)
        if rebuilt != self.owned:
            raise AssertionError("owned registry disagrees with container chunks")
        if not 0 <= self.unused_pct <= 100:
            raise AssertionError(f"unused percentage {self.unused_pct} out of range")

    def to_dict(self) -> dict:
        """JSON state dump"""
        return {
            'game': self.config.name,
            'shape': self.config.shape.value,
            'strategy': self.config.strategy.value,
            'board': {
                'cells': self.board_topology.cell_count,
                'dim': self.board_topology.spec.dim if self.board_topology.spec else None,
                'occupied': [{'site': int(s), 'coord': list(self.board_topology.coords[s])}
                             for s in self.board_state.occupied()],
            },
            'containers': self.snapshot_tables(),
            'owned': self.owned_report(),
            'trial': {
                'seed': self.trial.seed,
                'status': self.trial.status,
                'moves': [m.to_dict() for m in self.trial.moves],
            },
            'expansions': [e.to_record() for e in self.events],
        }
