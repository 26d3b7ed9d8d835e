"""
Flat container state: one chunk array per attribute over local site indices
"""
from typing import Dict, Tuple

import numpy as np

from src.errors import IllegalMoveError


class ContainerState:
    """Chunk arrays (empty/what/who/count/state/playable) of one container"""

    def __init__(self, site_count: int):
        """
        Args:
            site_count: Number of local sites
        """
        if site_count < 0:
            raise ValueError(f"Site count must be >= 0, got {site_count}")
        self.site_count = site_count
        self.empty = np.ones(site_count, dtype=bool)
        self.what = np.zeros(site_count, dtype=np.int32)
        self.who = np.zeros(site_count, dtype=np.int32)
        self.count = np.zeros(site_count, dtype=np.int32)
        self.state = np.zeros(site_count, dtype=np.int32)
        self.playable = np.zeros(site_count, dtype=bool)

    def place(self, site: int, component: int, owner: int, amount: int = 1, check_playable: bool = True,
              stack: bool = False):
        """
        Put components on a site

        Args:
            site: Local site index
            component: Component index (> 0)
            owner: Owner index (0 = board)
            amount: How many components to add
            check_playable: Reject sites outside the playable chunk
            stack: Allow adding to a site holding the same component
        """
        self._check_site(site)
        if component <= 0 or amount <= 0:
            raise IllegalMoveError(f"Invalid placement of {amount} x component {component}")
        if check_playable and not self.playable[site]:
            raise IllegalMoveError(f"Site {site} is not playable")
        if not self.empty[site] and (not stack or self.what[site] != component or self.who[site] != owner):
            raise IllegalMoveError(f"Site {site} already holds component {self.what[site]}")

        self.empty[site] = False
        self.what[site] = component
        self.who[site] = owner
        self.count[site] += amount
        self.playable[site] = False

    def remove(self, site: int, amount: int = 1) -> Tuple[int, int]:
        """
        Take components off a site

        Returns:
            (component, owner) that was removed
        """
        self._check_site(site)
        if self.empty[site]:
            raise IllegalMoveError(f"Site {site} is empty")
        if amount <= 0 or amount > self.count[site]:
            raise IllegalMoveError(f"Cannot remove {amount} from site {site} holding {self.count[site]}")

        removed = (int(self.what[site]), int(self.who[site]))
        self.count[site] -= amount
        if self.count[site] == 0:
            self.empty[site] = True
            self.what[site] = 0
            self.who[site] = 0
            self.state[site] = 0
        return removed

    def _check_site(self, site: int):
        if not 0 <= site < self.site_count:
            raise IllegalMoveError(f"Site {site} out of range 0..{self.site_count - 1}")

    def occupied(self) -> np.ndarray:
        return np.flatnonzero(~self.empty)

    def set_playable(self, sites):
        self.playable[:] = False
        self.playable[np.asarray(sites, dtype=np.int64)] = True

    def remapped(self, old_to_new: np.ndarray, new_count: int) -> 'ContainerState':
        """Copy of this state with every site moved through an index mapping"""
        if len(old_to_new) != self.site_count:
            raise ValueError(f"Mapping covers {len(old_to_new)} sites, container has {self.site_count}")
        moved = ContainerState(new_count)
        moved.empty[old_to_new] = self.empty
        moved.what[old_to_new] = self.what
        moved.who[old_to_new] = self.who
        moved.count[old_to_new] = self.count
        moved.state[old_to_new] = self.state
        moved.playable[old_to_new] = self.playable
        return moved

    def copy(self) -> 'ContainerState':
        return self.remapped(np.arange(self.site_count), self.site_count)

    def check_invariants(self):
        """Raise AssertionError when the flat-state rules are broken"""
        no_component = self.what == 0
        if not np.array_equal(self.empty, no_component):
            raise AssertionError("empty chunk disagrees with what chunk")
        if not np.array_equal(no_component, self.count == 0):
            raise AssertionError("count chunk disagrees with what chunk")
        if np.any(self.who[no_component]) or np.any(self.state[no_component]):
            raise AssertionError("who/state set on an empty site")
        if np.any(self.playable & ~self.empty):
            raise AssertionError("occupied site marked playable")

    def table(self) -> Dict[str, object]:
        """Empty and playable site lists plus per-site values of the occupied sites"""
        occupied = self.occupied()

        def entries(chunk) -> Dict[int, int]:
            return {int(s): int(chunk[s]) for s in occupied}

        return {
            'empty': [int(s) for s in np.flatnonzero(self.empty)],
            'what': entries(self.what),
            'who': entries(self.who),
            'count': entries(self.count),
            'state': {int(s): int(self.state[s]) for s in np.flatnonzero(self.state)},
            'playable': [int(s) for s in np.flatnonzero(self.playable)],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContainerState):
            return NotImplemented
        return self.site_count == other.site_count and all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ('empty', 'what', 'who', 'count', 'state', 'playable'))

    __hash__ = None


def apply_to_container(cs: ContainerState, site: int, component: int, owner: int, delta: int = 1,
                       check_playable: bool = True, stack: bool = False) -> ContainerState:
    """Add (delta > 0) or remove (delta < 0) components on one site"""
    if delta > 0:
        cs.place(site, component, owner, delta, check_playable, stack)
    elif delta < 0:
        cs.remove(site, -delta)
    return cs
