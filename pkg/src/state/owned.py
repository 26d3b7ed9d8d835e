"""
Owned registry: where every owner's components sit, by component type
"""
from typing import Callable, Dict, Iterable, List, Set

import numpy as np


class OwnedRegistry:
    """Per owner, per component type: set of global site indices"""

    def __init__(self):
        self._sites: Dict[int, Dict[int, Set[int]]] = {}

    def add(self, owner: int, component: int, site: int):
        self._sites.setdefault(owner, {}).setdefault(component, set()).add(site)

    def discard(self, owner: int, component: int, site: int):
        by_type = self._sites.get(owner, {})
        by_type.get(component, set()).discard(site)

    def sites(self, owner: int, component: int) -> Set[int]:
        return set(self._sites.get(owner, {}).get(component, ()))

    def all_sites(self, owner: int) -> Set[int]:
        found = set()
        for sites in self._sites.get(owner, {}).values():
            found |= sites
        return found

    def remapped(self, remap_site: Callable[[int], int]) -> 'OwnedRegistry':
        """Copy with every global site passed through remap_site"""
        moved = OwnedRegistry()
        for owner, by_type in self._sites.items():
            for component, sites in by_type.items():
                moved._sites.setdefault(owner, {})[component] = {remap_site(s) for s in sites}
        return moved

    def non_empty(self) -> Dict[int, Dict[int, Set[int]]]:
        return {owner: {comp: set(s) for comp, s in by_type.items() if s}
                for owner, by_type in self._sites.items()
                if any(by_type.values())}

    def __eq__(self, other) -> bool:
        if not isinstance(other, OwnedRegistry):
            return NotImplemented
        return self.non_empty() == other.non_empty()

    __hash__ = None

    @classmethod
    def from_chunks(cls, containers: Iterable) -> 'OwnedRegistry':
        """
        Rebuild the registry from scratch out of container chunks

        Args:
            containers: (global_offset, ContainerState) pairs
        """
        registry = cls()
        for offset, cs in containers:
            for site in np.flatnonzero(cs.count > 0):
                registry.add(int(cs.who[site]), int(cs.what[site]), offset + int(site))
        return registry

    def report(self, declared: Dict[int, List[int]], names: Dict[int, str]) -> Dict[str, List[List[int]]]:
        """
        Ownership table, one sorted site list per declared component type

        Args:
            declared: owner -> component types in display order
            names: owner -> display name
        """
        return {
            names[owner]: [sorted(self._sites.get(owner, {}).get(comp, ())) for comp in comps]
            for owner, comps in declared.items()
        }
