"""Undirected multigraphs with stable vertex and edge indices.

Edges are kept as an ordered list of unordered pairs; the position of a
pair in that list is the edge's index, and every transformation here
(vertex merging, one-point union, edge deletion) preserves the indices of
surviving edges so that edge labelings carry over unchanged.  Loops are
never allowed; parallel edges are.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional


@dataclass(frozen=True)
class Graph:
    """Immutable loop-free multigraph on vertices ``0..n-1``.

    ``provenance[v]`` is the set of original vertex identifiers that were
    collapsed into ``v`` (trivial for freshly built graphs).  It exists so
    merged vertices can be displayed with their original subscripts.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    provenance: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        if not self.provenance:
            object.__setattr__(
                self, "provenance", tuple((str(v),) for v in range(self.n))
            )
        else:
            prov = tuple(tuple(str(x) for x in entry) for entry in self.provenance)
            if len(prov) != self.n:
                raise ValueError("provenance length must equal vertex count")
            object.__setattr__(self, "provenance", prov)

    @property
    def q(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex (parallel edges repeat)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex map neighbor -> edge multiplicity."""
        adj: list[Counter] = [Counter() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u][v] += 1
            adj[v][u] += 1
        return tuple(dict(c) for c in adj)

    def neighbors(self, v: int) -> set[int]:
        return set(self.adjacency[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u].get(v, 0)

    def is_simple(self) -> bool:
        return all(m == 1 for adj in self.adjacency for m in adj.values())

    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degrees)) == 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def pendant_count(self) -> int:
        return sum(1 for d in self.degrees if d == 1)

    def vertex_name(self, v: int) -> str:
        return "v" + ",".join(self.provenance[v])

    def edge_multiset(self) -> Counter:
        return Counter(frozenset(e) for e in self.edges)


@dataclass(frozen=True)
class CirculantSpec:
    """Connection set for a circulant graph C_m(a_0, ..., a_t).

    Every step must be coprime to the modulus; non-coprime steps (which
    would split into disjoint cycles) are rejected.
    """

    m: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(a) for a in self.steps))
        if self.m < 3:
            raise ValueError("modulus must be at least 3")
        if not self.steps:
            raise ValueError("at least one step is required")
        if len(set(self.steps)) != len(self.steps):
            raise ValueError("duplicate steps are not allowed")
        if list(self.steps) != sorted(self.steps):
            raise ValueError("steps must be strictly increasing")
        half = (self.m + 1) // 2  # ceil(m/2)
        for a in self.steps:
            if not 1 <= a < half:
                raise ValueError(f"step {a} outside [1, ceil(m/2)) for m={self.m}")
            if math.gcd(a, self.m) != 1:
                raise ValueError(
                    f"unsupported step {a}: gcd({a},{self.m}) > 1 gives disjoint cycles"
                )


@dataclass(frozen=True)
class MergePlan:
    """Partition of the vertices of C_n into merge blocks.

    Blocks of kind 'A' may contain only even indices, kind 'B' only odd
    indices; kind 'C' may mix parities (the special block of odd-order
    transforms).  Whether a block would create a loop is checked against
    the actual graph at merge time.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(v) for v in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(self.kinds) != len(blocks):
            raise ValueError("one kind per block required")
        seen: set[int] = set()
        for block, kind in zip(blocks, self.kinds):
            if kind not in ("A", "B", "C"):
                raise ValueError(f"unknown block kind {kind!r}")
            if not block:
                raise ValueError("empty block")
            if len(set(block)) != len(block):
                raise ValueError("repeated vertex inside a block")
            if kind == "A" and any(v % 2 for v in block):
                raise ValueError(f"A-block {block} contains an odd index")
            if kind == "B" and any(v % 2 == 0 for v in block):
                raise ValueError(f"B-block {block} contains an even index")
            if kind == "C" and len(block) > 3:
                raise ValueError("C-blocks have size at most 3")
            seen.update(block)
        if seen != set(range(self.n)):
            raise ValueError("blocks must partition the vertex set")

    @staticmethod
    def identity(n: int) -> "MergePlan":
        return MergePlan(
            n,
            tuple((v,) for v in range(n)),
            tuple("A" if v % 2 == 0 else "B" for v in range(n)),
        )


def build_cycle(m: int) -> Graph:
    """Cycle C_m with edge j joining v_j and v_{j+1 mod m}."""
    if m < 3:
        raise ValueError(f"cycle order must be at least 3, got {m}")
    return Graph(m, tuple((j, (j + 1) % m) for j in range(m)))


def gamma_cycle_sequence(m: int, a: int) -> tuple[int, ...]:
    """Vertex sequence (0, a, 2a, ..., (m-1)a) mod m of the step-a cycle."""
    if math.gcd(a % m, m) != 1:
        raise ValueError(f"step {a} is not coprime to {m}")
    return tuple((j * a) % m for j in range(m))


def gamma_cycle(m: int, a: int) -> Graph:
    """The m-cycle visiting 0, a, 2a, ... ; edge j joins ja and (j+1)a."""
    seq = gamma_cycle_sequence(m, a)
    return Graph(m, tuple((seq[j], seq[(j + 1) % m]) for j in range(m)))


def build_circulant(spec: CirculantSpec) -> Graph:
    """Circulant graph as the union of step cycles, step-by-step edge order.

    All edges of the first step cycle come first (in cycle order starting
    at vertex 0), then the second step's, and so on, so position-defined
    labelings are deterministic.
    """
    edges: list[tuple[int, int]] = []
    for a in spec.steps:
        edges.extend(gamma_cycle(spec.m, a).edges)
    return Graph(spec.m, tuple(edges))


def merge_vertices(g: Graph, plan: MergePlan) -> Graph:
    """Collapse each block of the plan into one vertex, keeping all edges.

    The merged vertex takes the rank of the smallest original index among
    all block minima; edge indices are preserved.  A block containing two
    adjacent vertices would create a loop and is rejected.
    """
    if plan.n != g.n:
        raise ValueError(f"plan is for {plan.n} vertices, graph has {g.n}")
    block_of = [0] * g.n
    for b, block in enumerate(plan.blocks):
        for v in block:
            block_of[v] = b
    for u, v in g.edges:
        if block_of[u] == block_of[v]:
            raise ValueError(
                f"block {plan.blocks[block_of[u]]} contains adjacent vertices "
                f"{u} and {v}; merging would create a loop"
            )
    order = sorted(range(len(plan.blocks)), key=lambda b: plan.blocks[b][0])
    new_index = {b: i for i, b in enumerate(order)}
    prov = []
    for b in order:
        merged: list[str] = []
        for v in plan.blocks[b]:
            merged.extend(g.provenance[v])
        prov.append(tuple(sorted(set(merged), key=_prov_key)))
    edges = tuple(
        (new_index[block_of[u]], new_index[block_of[v]]) for u, v in g.edges
    )
    return Graph(len(plan.blocks), edges, tuple(prov))


def _prov_key(s: str):
    return (0, int(s)) if s.isdigit() else (1, s)


def one_point_union(graphs: list[Graph], attach: list[int]) -> Graph:
    """Identify one chosen vertex of every graph into a single central vertex.

    The central vertex gets index 0; the remaining vertices follow in graph
    order, then vertex order.  Edges are concatenated graph by graph with
    endpoints remapped, so edge indices stay stable per component.
    """
    if not graphs:
        raise ValueError("one-point union of an empty list")
    if len(attach) != len(graphs):
        raise ValueError("one attach vertex per graph required")
    single = len(graphs) == 1
    offset = 1
    maps: list[list[int]] = []
    prov: list[tuple[str, ...]] = []
    central_prov: list[str] = []
    for idx, (g, a) in enumerate(zip(graphs, attach)):
        if not 0 <= a < g.n:
            raise ValueError(f"attach vertex {a} out of range for graph {idx}")
        vmap = [0] * g.n
        prefix = "" if single else f"c{idx}."
        for v in range(g.n):
            if v == a:
                vmap[v] = 0
                central_prov.extend(prefix + p for p in g.provenance[v])
            else:
                vmap[v] = offset
                prov.append(tuple(prefix + p for p in g.provenance[v]))
                offset += 1
        maps.append(vmap)
    edges: list[tuple[int, int]] = []
    for g, vmap in zip(graphs, maps):
        edges.extend((vmap[u], vmap[v]) for u, v in g.edges)
    provenance = (tuple(central_prov),) + tuple(prov)
    return Graph(offset, tuple(edges), provenance)


def delete_edge(g: Graph, e: int) -> Graph:
    """Remove edge ``e``; the remaining edges keep their relative order."""
    if not 0 <= e < g.q:
        raise ValueError(f"edge index {e} out of range")
    return Graph(g.n, g.edges[:e] + g.edges[e + 1 :], g.provenance)


def partite_classes(g: Graph, k: int) -> Optional[list[list[int]]]:
    """A proper k-partition into independent sets, or None if none exists.

    Parallel edges count as a single adjacency.  k=2 runs a two-coloring
    traversal; k=3 runs exact backtracking (fine for a few hundred
    vertices on the sparse graphs built here).
    """
    if k == 2:
        color = [-1] * g.n
        for start in range(g.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in g.adjacency[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return [[v for v in range(g.n) if color[v] == c] for c in range(2)]
    if k == 3:
        color = [-1] * g.n
        order = sorted(range(g.n), key=lambda v: -g.degrees[v])

        def backtrack(i: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            used = {color[w] for w in g.adjacency[v] if color[w] != -1}
            for c in range(3):
                if c not in used:
                    color[v] = c
                    if backtrack(i + 1):
                        return True
            color[v] = -1
            return False

        if not backtrack(0):
            return None
        return [[v for v in range(g.n) if color[v] == c] for c in range(3)]
    raise ValueError("only k=2 and k=3 are supported")


def _neighbor_degree_signature(g: Graph) -> list[tuple]:
    return [
        (g.degrees[v], tuple(sorted(g.degrees[w] for w in g.adjacency[v])))
        for v in range(g.n)
    ]


def are_isomorphic(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """A vertex bijection carrying g1 onto g2 (multiplicities included), or None.

    Plain backtracking with degree and neighborhood-degree pruning;
    intended for the small instances this library produces.
    """
    if g1.n != g2.n or g1.q != g2.q:
        return None
    if sorted(g1.degrees) != sorted(g2.degrees):
        return None
    sig1 = _neighbor_degree_signature(g1)
    sig2 = _neighbor_degree_signature(g2)
    if sorted(sig1) != sorted(sig2):
        return None

    # BFS order so each vertex (after the first of a component) has a
    # mapped neighbor, which shrinks its candidate set to a neighborhood.
    order: list[int] = []
    seen = [False] * g1.n
    for start in range(g1.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in g1.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    mapping = [-1] * g1.n
    inverse = [-1] * g2.n
    used = [False] * g2.n

    def compatible(v: int, w: int) -> bool:
        if sig1[v] != sig2[w]:
            return False
        for u, mult in g1.adjacency[v].items():
            mu = mapping[u]
            if mu != -1 and g2.adjacency[w].get(mu, 0) != mult:
                return False
        for x, mult in g2.adjacency[w].items():
            u = inverse[x]
            if u != -1 and g1.adjacency[v].get(u, 0) != mult:
                return False
        return True

    def candidates(v: int):
        anchored = [mapping[u] for u in g1.adjacency[v] if mapping[u] != -1]
        if anchored:
            return [w for w in g2.adjacency[anchored[0]] if not used[w]]
        return [w for w in range(g2.n) if not used[w]]

    def backtrack(i: int) -> bool:
        if i == g1.n:
            return True
        v = order[i]
        for w in candidates(v):
            if compatible(v, w):
                mapping[v] = w
                inverse[w] = v
                used[w] = True
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                inverse[w] = -1
                used[w] = False
        return False

    if not backtrack(0):
        return None
    assert verify_vertex_map(g1, g2, mapping)
    return mapping


def verify_vertex_map(g1: Graph, g2: Graph, mapping: list[int]) -> bool:
    """True iff ``mapping`` is a bijection with equal edge multisets."""
    if sorted(mapping) != list(range(g2.n)):
        return False
    mapped = Counter(frozenset((mapping[u], mapping[v])) for u, v in g1.edges)
    return mapped == g2.edge_multiset()
