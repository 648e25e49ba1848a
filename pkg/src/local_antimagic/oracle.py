"""Exact minimum color count by exhaustive labeling search.

Intended for cross-checking the constructive labelings on small graphs.
The search assigns labels edge by edge in a vertex-clustering order,
prunes on adjacent completed-sum ties, and bounds by the number of
distinct sums already frozen.  A hard edge budget keeps accidental huge
inputs from hanging; raise it explicitly (or via the
ANTIMAGIC_BUDGET_EDGES environment variable) when you mean it.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph
from .labelings import EdgeLabeling


DEFAULT_MAX_EDGES = 10
BUDGET_ENV = "ANTIMAGIC_BUDGET_EDGES"


class BudgetExceeded(RuntimeError):
    pass


def _default_max_edges() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_MAX_EDGES


@dataclass
class SearchBudget:
    max_edges: int = field(default_factory=_default_max_edges)
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: EdgeLabeling
    nodes: int
    seconds: float


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking, highest degree first."""
    if g.n == 0:
        return 0
    if g.q == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degrees[v])
    color = [-1] * g.n

    def feasible(k: int) -> bool:
        def backtrack(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            taken = {color[w] for w in g.adjacency[v] if color[w] != -1}
            # Try at most one fresh color to kill color-permutation symmetry.
            for c in range(min(used + 1, k)):
                if c not in taken:
                    color[v] = c
                    if backtrack(i + 1, max(used, c + 1)):
                        return True
            color[v] = -1
            return False

        for v in range(g.n):
            color[v] = -1
        return backtrack(0, 0)

    for k in range(2, g.n + 1):
        if feasible(k):
            return k
    return g.n


def _edge_order(g: Graph) -> list[int]:
    """Order edges so each vertex's incident edges appear close together,
    which completes vertex sums early and sharpens pruning."""
    seen_edge = [False] * g.q
    seen_vertex = [False] * g.n
    order: list[int] = []
    for start in sorted(range(g.n), key=lambda v: -g.degrees[v]):
        if seen_vertex[start]:
            continue
        stack = [start]
        while stack:
            v = stack.pop()
            if seen_vertex[v]:
                continue
            seen_vertex[v] = True
            for i in g.incident[v]:
                if not seen_edge[i]:
                    seen_edge[i] = True
                    order.append(i)
                    u, w = g.edges[i]
                    stack.append(w if u == v else u)
    return order


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget):
        if g.q > budget.max_edges:
            raise BudgetExceeded(
                f"{g.q} edges exceeds the search budget of {budget.max_edges}; "
                f"raise SearchBudget.max_edges or {BUDGET_ENV} to override"
            )
        self.g = g
        self.budget = budget
        self.order = _edge_order(g)
        self.sums = [0] * g.n
        self.remaining = list(g.degrees)
        self.labels = [0] * g.q
        self.free = [True] * (g.q + 1)
        self.nodes = 0
        self.start = time.perf_counter()
        # Sums of completed vertices, with multiplicity, for the bound.
        self.frozen: dict[int, int] = {}
        for v in range(g.n):
            if g.degrees[v] == 0:
                self.frozen[0] = self.frozen.get(0, 0) + 1

    def _tick(self):
        self.nodes += 1
        b = self.budget
        if b.node_limit is not None and self.nodes > b.node_limit:
            raise BudgetExceeded(f"node limit {b.node_limit} exceeded")
        if (
            b.time_limit is not None
            and self.nodes % 1024 == 0
            and time.perf_counter() - self.start > b.time_limit
        ):
            raise BudgetExceeded(f"time limit {b.time_limit}s exceeded")

    def run(self, max_colors: int) -> Optional[list[int]]:
        """First labeling found with at most max_colors distinct sums."""
        return self._extend(0, max_colors)

    def _extend(self, i: int, max_colors: int) -> Optional[list[int]]:
        g = self.g
        if i == g.q:
            return list(self.labels)
        e = self.order[i]
        u, v = g.edges[e]
        q = g.q
        # The complement q+1-f of a labeling of a regular graph induces the
        # mirrored sums, so on regular graphs the first label can be
        # restricted to the lower half.
        top = (q + 1) // 2 if i == 0 and g.is_regular() else q
        for label in range(1, top + 1):
            if not self.free[label]:
                continue
            self._tick()
            self.labels[e] = label
            self.free[label] = False
            self.sums[u] += label
            self.sums[v] += label
            self.remaining[u] -= 1
            self.remaining[v] -= 1
            if self._consistent(u, v, max_colors):
                found = self._extend(i + 1, max_colors)
                if found is not None:
                    self._undo(e, label, u, v)
                    return found
            self._undo(e, label, u, v)
        return None

    def _undo(self, e: int, label: int, u: int, v: int):
        for w in (u, v):
            if self.remaining[w] == 0:
                count = self.frozen[self.sums[w]]
                if count == 1:
                    del self.frozen[self.sums[w]]
                else:
                    self.frozen[self.sums[w]] = count - 1
        self.labels[e] = 0
        self.free[label] = True
        self.sums[u] -= label
        self.sums[v] -= label
        self.remaining[u] += 1
        self.remaining[v] += 1

    def _consistent(self, u: int, v: int, max_colors: int) -> bool:
        ok = True
        for w in (u, v):
            if self.remaining[w] == 0:
                s = self.sums[w]
                for x in self.g.adjacency[w]:
                    if self.remaining[x] == 0 and self.sums[x] == s:
                        ok = False
                self.frozen[s] = self.frozen.get(s, 0) + 1
        return ok and len(self.frozen) <= max_colors


def feasible_with_colors(
    g: Graph, k: int, budget: Optional[SearchBudget] = None
) -> Optional[EdgeLabeling]:
    """A local antimagic labeling of g with at most k distinct sums, or
    None after an exhaustive search finds none."""
    search = _Search(g, budget or SearchBudget())
    found = search.run(k)
    return EdgeLabeling(tuple(found)) if found is not None else None


def exact_chi_la(g: Graph, budget: Optional[SearchBudget] = None) -> OracleResult:
    """Exact minimum number of induced sums over all local antimagic
    labelings, with a witness labeling.

    Starts at the chromatic number (adjacent vertices need distinct sums,
    so any labeling properly colors the graph) and increases until a
    witness exists.  Raises if no labeling exists at all, which among
    connected graphs only happens for a single edge.
    """
    budget = budget or SearchBudget()
    start = time.perf_counter()
    nodes = 0
    lower = chromatic_number(g)
    for k in range(lower, g.n + 1):
        search = _Search(g, budget)
        found = search.run(k)
        nodes += search.nodes
        if found is not None:
            return OracleResult(
                k, EdgeLabeling(tuple(found)), nodes, time.perf_counter() - start
            )
    raise ValueError("graph admits no local antimagic labeling")
