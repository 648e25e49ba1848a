"""Transforming a canonically labeled cycle into denser graphs by vertex
merging, plus the iterated block-matrix construction that yields
even-order circulants of every 2^s degree.

Eight named merge plans cover the residues of n mod 8; merging preserves
edge labels, so the induced sums of the merged graph are the sums of the
originals and land on exactly three values per residue family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import (
    CirculantSpec,
    Graph,
    MergePlan,
    build_circulant,
    build_cycle,
    merge_vertices,
    verify_vertex_map,
)
from .circulants import c_labeling
from .labelings import EdgeLabeling, induced_coloring


def case_plan(case: int, k: int) -> MergePlan:
    """The named merge plan for C_n, transcribed literally.

    Case order forms: 1: n=8k, 2: n=8k+4, 3: n=8k+2, 4: n=8k+6,
    5: n=8k+1, 6: n=8k+5, 7: n=8k+3, 8: n=8k+7; all need k >= 2.
    Cases 1-4 produce 4-regular graphs; 5-6 keep one degree-2 vertex;
    7-8 merge a triple into one degree-6 vertex.
    """
    if k < 2:
        raise ValueError(f"case plans require k >= 2, got {k}")
    a_blocks: list[tuple[int, ...]]
    b_blocks: list[tuple[int, ...]]
    c_blocks: list[tuple[int, ...]] = []
    if case == 1:
        n = 8 * k
        a_blocks = [(2 * i, 4 * k + 2 * i) for i in range(2 * k)]
        b_blocks = [
            (2 * j + 1, 2 * k + 2 * j + 1)
            for j in list(range(k)) + list(range(2 * k, 3 * k))
        ]
    elif case == 2:
        n = 8 * k + 4
        a_blocks = [(2 * i, 4 * k + 2 * i + 2) for i in range(2 * k + 1)]
        b_blocks = [(2 * j + 1, 2 * k + 2 * j + 3) for j in range(k + 1)]
        b_blocks += [(4 * k + 2 * j + 5, 6 * k + 2 * j + 5) for j in range(k)]
    elif case == 3:
        n = 8 * k + 2
        a_blocks = [(2 * i, 4 * k + 2 * i) for i in range(1, 2 * k + 1)]
        b_blocks = [(2 * j + 1, 4 * k + 2 * j + 3) for j in range(2 * k)]
        c_blocks = [(0, 4 * k + 1)]
    elif case == 4:
        n = 8 * k + 6
        a_blocks = [(2 * i, 4 * k + 2 + 2 * i) for i in range(1, 2 * k + 2)]
        b_blocks = [(2 * j + 1, 6 * k + 5 + 2 * j) for j in range(k + 1)]
        b_blocks += [(2 * k + 3 + 2 * j, 4 * k + 5 + 2 * j) for j in range(k)]
        c_blocks = [(0, 4 * k + 3)]
    elif case == 5:
        n = 8 * k + 1
        a_blocks = [(2 * i, 4 * k + 2 * i) for i in range(1, 2 * k + 1)]
        b_blocks = [(2 * j + 1, 2 * k + 2 * j + 1) for j in range(k)]
        b_blocks += [(4 * k + 2 * j + 1, 6 * k + 2 * j + 1) for j in range(k)]
        c_blocks = [(0,)]
    elif case == 6:
        n = 8 * k + 5
        a_blocks = [(2 * i, 4 * k + 2 + 2 * i) for i in range(1, 2 * k + 2)]
        b_blocks = [(2 * j + 1, 6 * k + 3 + 2 * j) for j in range(k + 1)]
        b_blocks += [(2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j) for j in range(k)]
        c_blocks = [(0,)]
    elif case == 7:
        n = 8 * k + 3
        a_blocks = [(2 * i, 4 * k + 2 * i) for i in range(1, k + 1)]
        a_blocks += [(2 * k + 2 * i, 6 * k + 2 + 2 * i) for i in range(1, k + 1)]
        b_blocks = [(2 * j + 1, 8 * k + 1 - 2 * j) for j in range(k)]
        b_blocks += [(2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j) for j in range(k)]
        c_blocks = [(0, 2 * k + 1, 6 * k + 2)]
    elif case == 8:
        n = 8 * k + 7
        a_blocks = [(2 * i, 4 * k + 4 + 2 * i) for i in range(1, k + 1)]
        a_blocks += [(2 * k + 2 + 2 * i, 6 * k + 4 + 2 * i) for i in range(1, k + 2)]
        b_blocks = [(4 * j + 1, 4 * k + 3 + 2 * j) for j in range(k + 1)]
        b_blocks += [(4 * j + 3, 6 * k + 7 + 2 * j) for j in range(k)]
        c_blocks = [(0, 2 * k + 2, 6 * k + 5)]
    else:
        raise ValueError(f"unknown case {case}")
    blocks = tuple(a_blocks) + tuple(b_blocks) + tuple(c_blocks)
    kinds = ("A",) * len(a_blocks) + ("B",) * len(b_blocks) + ("C",) * len(c_blocks)
    return MergePlan(n, blocks, kinds)


def case_order(case: int, k: int) -> int:
    return {1: 8 * k, 2: 8 * k + 4, 3: 8 * k + 2, 4: 8 * k + 6,
            5: 8 * k + 1, 6: 8 * k + 5, 7: 8 * k + 3, 8: 8 * k + 7}[case]


def family_colors(n: int) -> tuple[str, frozenset[int]]:
    """Expected induced sums of the merged graph, by residue of n mod 4."""
    m, r = divmod(n, 4)
    if r == 0:
        return "4m", frozenset({6 * m + 4, 8 * m + 4, 8 * m + 2})
    if r == 1:
        return "4m+1", frozenset({2 * m + 2, 8 * m + 6, 8 * m + 4})
    if r == 2:
        return "4m+2", frozenset({6 * m + 6, 8 * m + 8, 8 * m + 6})
    return "4m+3", frozenset({10 * m + 12, 8 * m + 10, 8 * m + 8})


@dataclass(frozen=True)
class CycleTransformResult:
    graph: Graph
    labeling: EdgeLabeling
    family: str
    expected_colors: frozenset[int]


def transform_cycle(n: int, plan: MergePlan) -> CycleTransformResult:
    """Apply the canonical labeling to C_n, merge per the plan, and verify
    that the induced sums are exactly the family's three values.

    A mismatch means the plan is not one of the sum-preserving shapes and
    is reported as a hard error rather than returned silently.
    """
    if plan.n != n:
        raise ValueError(f"plan order {plan.n} does not match n={n}")
    labeling = c_labeling(n)
    merged = merge_vertices(build_cycle(n), plan)
    family, expected = family_colors(n)
    coloring = induced_coloring(merged, labeling)
    if coloring.conflicts:
        raise AssertionError(
            f"merged labeling has adjacent equal sums: {coloring.conflicts[0]}"
        )
    if coloring.colors != expected:
        raise AssertionError(
            f"induced sums {sorted(coloring.colors)} do not match the "
            f"{family} profile {sorted(expected)}"
        )
    return CycleTransformResult(merged, labeling, family, expected)


def verify_case1_circulant(k: int) -> list[int]:
    """Certify that the Case-1 merge of C_{8k} equals C_{4k}(1, 2k-1).

    Builds the explicit relabeling (merged pair with smallest index 2i
    becomes u_{2i}; odd pairs keep their small index when it is below 2k
    and drop by 2k otherwise) and checks it edge-by-edge.  Failure is a
    construction bug.
    """
    plan = case_plan(1, k)
    merged = merge_vertices(build_cycle(8 * k), plan)
    target = build_circulant(CirculantSpec(4 * k, (1, 2 * k - 1)))
    mapping = [0] * merged.n
    for v in range(merged.n):
        smallest = min(int(p) for p in merged.provenance[v])
        if smallest % 2 == 0:
            mapping[v] = smallest
        elif smallest <= 2 * k - 1:
            mapping[v] = smallest
        else:
            mapping[v] = smallest - 2 * k
    if not verify_vertex_map(merged, target, mapping):
        raise AssertionError(f"Case 1 relabeling failed certification at k={k}")
    return mapping


@dataclass(frozen=True)
class EvenOddArrays:
    """Block-recursive arrays of the evens (columns) and odds (rows) of
    [0, n-1], for n = 2^{2s-1}(t+2)."""

    s: int
    t: int
    evens: tuple[tuple[int, ...], ...]  # 2^{s-1}(t+2) x 2^{s-1}
    odds: tuple[tuple[int, ...], ...]  # 2^{s-1} x 2^{s-1}(t+2)


def build_even_odd_arrays(s: int, t: int) -> EvenOddArrays:
    """Assemble the even and odd arrays by the quartered block recursion
    with offsets 2^{2i-2}(2t+4) * {0, 1, 2, 3}."""
    if s < 2 or t < 0:
        raise ValueError("requires s >= 2 and t >= 0")
    n = 2 ** (2 * s - 1) * (t + 2)
    a = np.arange(0, 2 * t + 3, 2, dtype=np.int64).reshape(-1, 1)
    b = np.arange(1, 2 * t + 4, 2, dtype=np.int64).reshape(1, -1)
    for i in range(1, s):
        off = 2 ** (2 * i - 2) * (2 * t + 4)
        a = np.block([[a, a + 2 * off], [a + off, a + 3 * off]])
        b = np.block([[b, b + 2 * off], [b + off, b + 3 * off]])
    assert sorted(a.ravel().tolist()) == list(range(0, n, 2))
    assert sorted(b.ravel().tolist()) == list(range(1, n, 2))
    return EvenOddArrays(
        s, t, tuple(map(tuple, a.tolist())), tuple(map(tuple, b.tolist()))
    )


def construction_steps(s: int, t: int) -> tuple[int, ...]:
    """Connection set of the order-2^s(t+2) circulant realized by the
    construction matrix: 1 and 2t+3 shifted by multiples of 2t+4."""
    steps: set[int] = set()
    for j in range(2 ** (s - 2)):
        steps.add(1 + j * (2 * t + 4))
        steps.add(2 * t + 3 + j * (2 * t + 4))
    return tuple(sorted(steps))


@dataclass(frozen=True)
class ConstructionMatrix:
    """0/1 incidence pattern plus the label matrix of the iterated
    construction, together with the certified circulant it realizes.

    Rows index the merged even groups (vertices u_0, u_2, ...), columns
    the merged odd groups (u_1, u_3, ...).  Row sums of the label matrix
    are the induced sums of the even vertices; column sums those of the
    odd vertices.
    """

    s: int
    t: int
    n: int
    arrays: EvenOddArrays
    pattern: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[Optional[int], ...], ...]
    spec: CirculantSpec
    graph: Graph
    labeling: EdgeLabeling

    @property
    def order(self) -> int:
        return len(self.pattern)

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(x for x in row if x is not None) for row in self.labels
        )

    @property
    def col_sums(self) -> tuple[int, ...]:
        size = self.order
        return tuple(
            sum(self.labels[x][y] for x in range(size) if self.labels[x][y] is not None)
            for y in range(size)
        )

    def render(self) -> str:
        """Text table in the layout of the label matrices elsewhere in
        this library: odd groups as stacked column headers, even groups
        as row headers, '*' for empty cells, trailing Sum row/column."""
        size = self.order
        width = len(self.arrays.evens[0])
        head_rows = []
        for rr in range(len(self.arrays.odds)):
            head = [""] * width + [str(self.arrays.odds[rr][y]) for y in range(size)]
            head.append("Sum" if rr == len(self.arrays.odds) - 1 else "")
            head_rows.append(head)
        body = []
        for x in range(size):
            row = [str(v) for v in self.arrays.evens[x]]
            row += ["*" if c is None else str(c) for c in self.labels[x]]
            row.append(str(self.row_sums[x]))
            body.append(row)
        foot = [""] * (width - 1) + ["Sum"] + [str(cs) for cs in self.col_sums] + [""]
        rows = head_rows + body + [foot]
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
        )


def build_construction_matrix(s: int, t: int) -> ConstructionMatrix:
    """Build the incidence and label matrices for parameters (s, t) and
    certify the resulting 2^s-regular circulant and its 3-color labeling.

    A cell is occupied when its even row and odd column hold consecutive
    integers p, q; the label is p/2+1 when q=p+1 and n-p/2+1 when q=p-1.
    The top-right corner additionally carries n/2+1, matching the
    canonical cycle labeling the construction folds up.
    """
    arrays = build_even_odd_arrays(s, t)
    n = 2 ** (2 * s - 1) * (t + 2)
    size = 2 ** (s - 1) * (t + 2)
    row_sets = [set(row) for row in arrays.evens]
    col_sets = [
        {arrays.odds[rr][y] for rr in range(len(arrays.odds))} for y in range(size)
    ]
    pattern = [[0] * size for _ in range(size)]
    labels: list[list[Optional[int]]] = [[None] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            pairs = [
                (p, q)
                for p in row_sets[x]
                for q in (p - 1, p + 1)
                if q in col_sets[y]
            ]
            if len(pairs) > 1:
                raise AssertionError(
                    f"cell ({x},{y}) holds two consecutive pairs: {pairs}"
                )
            if pairs:
                p, q = pairs[0]
                pattern[x][y] = 1
                labels[x][y] = p // 2 + 1 if q == p + 1 else n - p // 2 + 1
    if labels[0][size - 1] is not None:
        raise AssertionError("corner cell unexpectedly occupied")
    pattern[0][size - 1] = 1
    labels[0][size - 1] = n // 2 + 1
    used = sorted(x for row in labels for x in row if x is not None)
    if used != list(range(1, n + 1)):
        raise AssertionError("construction labels are not a bijection onto 1..n")
    for x in range(size):
        shifted = [pattern[x][(y - 1) % size] for y in range(size)]
        if pattern[(x + 1) % size] != shifted:
            raise AssertionError("incidence pattern rows are not cyclic shifts")

    # Vertices u_0..u_{2*size-1}: row x is u_{2x}, column y is u_{2y+1}.
    edges: list[tuple[int, int]] = []
    edge_labels: list[int] = []
    for x in range(size):
        for y in range(size):
            if pattern[x][y]:
                edges.append((2 * x, 2 * y + 1))
                edge_labels.append(labels[x][y])
    prov = []
    for v in range(2 * size):
        if v % 2 == 0:
            prov.append(tuple(str(p) for p in arrays.evens[v // 2]))
        else:
            prov.append(
                tuple(str(arrays.odds[rr][v // 2]) for rr in range(len(arrays.odds)))
            )
    graph = Graph(2 * size, tuple(edges), tuple(prov))
    labeling = EdgeLabeling(tuple(edge_labels))

    spec = CirculantSpec(2 * size, construction_steps(s, t))
    if graph.edge_multiset() != build_circulant(spec).edge_multiset():
        raise AssertionError(f"pattern does not match the adjacency of {spec}")
    coloring = induced_coloring(graph, labeling)
    if coloring.conflicts or len(coloring.colors) != 3:
        raise AssertionError("construction labeling is not 3-color local antimagic")
    return ConstructionMatrix(
        s,
        t,
        n,
        arrays,
        tuple(map(tuple, pattern)),
        tuple(tuple(r) for r in labels),
        spec,
        graph,
        labeling,
    )


def merge_plan_from_arrays(arrays: EvenOddArrays) -> MergePlan:
    """Merge plan collapsing C_n by the array rows (evens) and columns
    (odds); with s=2 this is the generic pair merge, larger s folds the
    cycle into a 2^s-regular graph."""
    n = 2 ** (2 * arrays.s - 1) * (arrays.t + 2)
    size = len(arrays.evens)
    a_blocks = [tuple(sorted(row)) for row in arrays.evens]
    b_blocks = [
        tuple(sorted(arrays.odds[rr][y] for rr in range(len(arrays.odds))))
        for y in range(size)
    ]
    blocks = tuple(a_blocks) + tuple(b_blocks)
    kinds = ("A",) * len(a_blocks) + ("B",) * len(b_blocks)
    return MergePlan(n, blocks, kinds)
