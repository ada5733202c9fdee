"""Backtracking search for a labeling of a given kind.

Colors are assigned in vertex index order, each vertex trying its span in
ascending order, so the first hit is the lexicographically smallest accepted
vertex color tuple. Total bijective kinds then place the remaining values of
[1, p+q] on the edges.
"""

import logging
from typing import Any, Iterable, Optional

from ..config import Settings
from ..errors import BudgetExceeded, MissingParameterError, PreconditionError
from ..graph import Graph
from .kinds import Labeling
from .verify import get_kind, verify

log = logging.getLogger(__name__)


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded its budget of {self.budget} nodes", nodes=self.nodes)


def search_labeling(
    g: Graph,
    kind: str,
    budget: Optional[int] = None,
    *,
    bipartition: Optional[tuple[Iterable[int], Iterable[int]]] = None,
    **params: Any,
) -> Optional[Labeling]:
    """
    Find the first labeling of ``kind`` on g, or None when none exists.

    Raises BudgetExceeded after ``budget`` search nodes (default from
    Settings.search_budget).

    Usage:
        search_labeling(path(4), "graceful").vertex   # (0, 3, 1, 2)
        search_labeling(cycle(5), "graceful")          # None
        search_labeling(star(3), "kd-graceful", k=2, d=3)
    """
    spec = get_kind(kind)
    for name in spec.required:
        if name not in params:
            raise MissingParameterError(f"kind {kind!r} requires parameter {name!r}")
    if not spec.searchable:
        raise PreconditionError(f"kind {kind!r} has no finite color span to search")

    counter = _Counter(Settings().search_budget if budget is None else budget)
    p, q = g.vertex_count, g.q
    order = list(range(p))
    lower = [[u for u in g.adjacency[v] if u < v] for v in order]
    colors: list[int] = [0] * p

    if spec.bijective:
        span = range(1, p + q + 1)
        key = None
        injective = True
    else:
        span = spec.span(p, q, params)
        key = spec.distinct(q, params) if spec.distinct else None
        injective = spec.injective

    def accept(lab: Labeling) -> bool:
        return verify(g, lab, kind, bipartition=bipartition, **params).accepted

    def place_edges(i: int, free: list[int], edge_colors: list[int]) -> Optional[Labeling]:
        if i == q:
            lab = Labeling(tuple(colors), tuple(edge_colors), kind=kind, params=params)
            return lab if accept(lab) else None
        for j, value in enumerate(free):
            counter.tick()
            edge_colors.append(value)
            found = place_edges(i + 1, free[:j] + free[j + 1 :], edge_colors)
            edge_colors.pop()
            if found is not None:
                return found
        return None

    used: set[int] = set()
    used_keys: set[int] = set()

    def place_vertex(i: int) -> Optional[Labeling]:
        if i == p:
            if spec.bijective:
                return place_edges(0, [c for c in span if c not in used], [])
            lab = Labeling(tuple(colors), kind=kind, params=params)
            return lab if accept(lab) else None
        v = order[i]
        for c in span:
            if injective and c in used:
                continue
            keys = []
            if key is not None:
                clash = False
                for u in lower[v]:
                    value = key(colors[u], c)
                    if value in used_keys or value in keys:
                        clash = True
                        break
                    keys.append(value)
                if clash:
                    continue
            counter.tick()
            colors[v] = c
            if injective:
                used.add(c)
            used_keys.update(keys)
            found = place_vertex(i + 1)
            used_keys.difference_update(keys)
            used.discard(c)
            if found is not None:
                return found
        return None

    result = place_vertex(0)
    log.debug("search %s on %r: %s after %d nodes", kind, g, "found" if result else "none", counter.nodes)
    return result
