"""Canonical cycle labeling, translated labelings, and the combined
circulant labeling with three induced sums.

The base cycle labeling alternates small and large labels: edge j gets
(j+2)/2 when j is even and m-(j-1)/2 when j is odd, giving three induced
sums (floor(m/2)+2 at v_0, m+1 at odd vertices, m+2 at the other evens).
Copies translated by i*m are laid on the step cycles of an even-order
circulant; the combined labeling again has exactly three sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    CirculantSpec,
    Graph,
    build_circulant,
    gamma_cycle,
    gamma_cycle_sequence,
    verify_vertex_map,
)
from .labelings import EdgeLabeling, induced_coloring, validate_labeling


@dataclass(frozen=True)
class GammaCycle:
    """The step-a Hamiltonian cycle of Z_m, for a coprime to m."""

    m: int
    a: int

    def __post_init__(self):
        if math.gcd(self.a % self.m, self.m) != 1:
            raise ValueError(f"step {self.a} is not coprime to {self.m}")

    @property
    def sequence(self) -> tuple[int, ...]:
        return gamma_cycle_sequence(self.m, self.a)

    def graph(self) -> Graph:
        return gamma_cycle(self.m, self.a)


def c_labeling(m: int) -> EdgeLabeling:
    """The canonical three-color labeling of C_m."""
    if m < 3:
        raise ValueError(f"cycle order must be at least 3, got {m}")
    return EdgeLabeling(
        tuple((j + 2) // 2 if j % 2 == 0 else m - (j - 1) // 2 for j in range(m))
    )


def c_labeling_sums(m: int) -> tuple[int, int, int]:
    """Expected induced sums of the canonical cycle labeling:
    (at v_0, at odd vertices, at even vertices > 0)."""
    return (m // 2 + 2, m + 1, m + 2)


def translated_labeling(m: int, a: int, i: int) -> tuple[Graph, EdgeLabeling]:
    """The step-a cycle labeled by the canonical labeling shifted by i*m,
    so its labels fill [i*m+1, (i+1)*m]."""
    if i < 0:
        raise ValueError("translation index must be non-negative")
    base = c_labeling(m)
    labels = EdgeLabeling(tuple(x + i * m for x in base.labels))
    return gamma_cycle(m, a), labels


def circulant_colors(n: int, t: int) -> frozenset[int]:
    """Closed-form induced sums of the combined labeling on C_{2n} with
    t+1 steps: central, odd-vertex, and even-vertex values."""
    return frozenset(
        {
            (t + 1) * (2 * n * t + n + 2),
            (t + 1) * (2 * n * t + 2 * n + 1),
            (t + 1) * (2 * n * t + 2 * n + 2),
        }
    )


def circulant_labeling(spec: CirculantSpec) -> tuple[Graph, EdgeLabeling]:
    """Combined labeling of an even-order circulant: the i-th step cycle
    carries the canonical labeling translated by i*m.

    Odd order is refused: there the same construction produces adjacent
    equal sums (e.g. C_9(1,2)).  The result is verified to be local
    antimagic with exactly the three closed-form sums before returning.
    """
    m = spec.m
    if m % 2 != 0:
        raise ValueError(
            f"combined circulant labeling requires even order, got {m}; "
            "the construction fails on odd cycles such as C_9(1,2)"
        )
    if spec.steps[0] != 1:
        raise ValueError("connection set must contain step 1")
    graph = build_circulant(spec)
    base = c_labeling(m)
    labels: list[int] = []
    for i in range(len(spec.steps)):
        labels.extend(x + i * m for x in base.labels)
    labeling = EdgeLabeling(tuple(labels))
    n, t = m // 2, len(spec.steps) - 1
    coloring = induced_coloring(graph, labeling)
    if coloring.conflicts or coloring.colors != circulant_colors(n, t):
        raise AssertionError(
            f"combined labeling failed verification for {spec}"
        )
    return graph, labeling


def _canonical_step(a: int, n: int) -> int:
    a %= n
    return min(a, n - a)


def certify_multiplier(
    src: CirculantSpec, dst: CirculantSpec, mult: int
) -> Optional[list[int]]:
    """Verify edge-by-edge that i -> mult*i mod n maps src onto dst.

    Returns the vertex bijection when it is an isomorphism, else None.
    """
    n = src.m
    if dst.m != n or math.gcd(mult, n) != 1:
        return None
    mapping = [(mult * i) % n for i in range(n)]
    g1, g2 = build_circulant(src), build_circulant(dst)
    return mapping if verify_vertex_map(g1, g2, mapping) else None


def multiplier_isomorphism(n: int, a: int, b: int) -> list[int]:
    """Certified isomorphism C_n(1,a) -> C_n(1,b) via i -> b*i mod n.

    Valid whenever a*b = +-1 (mod n); any other pair is refused rather
    than tried, since the lemma gives no guarantee there.
    """
    if math.gcd(a, n) != 1:
        raise ValueError(f"step {a} is not coprime to {n}")
    if (a * b) % n not in (1 % n, (-1) % n):
        raise ValueError(
            f"a*b = {a * b} is not +-1 mod {n}; multiplier map not certified"
        )
    src = CirculantSpec(n, tuple(sorted({1, _canonical_step(a, n)})))
    dst = CirculantSpec(n, tuple(sorted({1, _canonical_step(b, n)})))
    mapping = certify_multiplier(src, dst, b)
    if mapping is None:
        raise AssertionError(f"multiplier map i->{b}i failed certification")
    return mapping


def circulant_spectrum(spec: CirculantSpec) -> list[float]:
    """Adjacency eigenvalues via the cosine closed form:
    lambda_j = sum over steps a of 2 cos(2 pi a j / m)."""
    m = spec.m
    return [
        sum(2.0 * math.cos(2.0 * math.pi * a * j / m) for a in spec.steps)
        for j in range(m)
    ]


def spectra_equal(s1: list[float], s2: list[float], tol: float = 1e-9) -> bool:
    """Multiset comparison of two spectra within an absolute tolerance."""
    if len(s1) != len(s2):
        return False
    for x, y in zip(sorted(s1), sorted(s2)):
        if abs(x - y) > tol:
            return False
    return True


@dataclass(frozen=True)
class LabelingMatrixView:
    """Symmetric label matrix: entry (u,v) is the label of edge uv.

    Row sums equal the induced vertex sums.  Only defined for simple
    graphs, where every cell is unambiguous.
    """

    entries: tuple[tuple[Optional[int], ...], ...]
    row_sums: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def render(self) -> str:
        """Aligned text table with '*' for absent entries and a trailing
        Sum column, in the layout used throughout this library's docs."""
        n = self.size
        header = [""] + [str(v) for v in range(n)] + ["Sum"]
        rows = [header]
        for u in range(n):
            cells = [str(u)]
            cells += [
                "*" if x is None else str(x) for x in self.entries[u]
            ]
            cells.append(str(self.row_sums[u]))
            rows.append(cells)
        widths = [max(len(r[c]) for r in rows) for c in range(n + 2)]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
        )


def labeling_matrix_view(g: Graph, f: EdgeLabeling) -> LabelingMatrixView:
    validate_labeling(g, f)
    if not g.is_simple():
        raise ValueError("labeling matrix is ambiguous on parallel edges")
    entries: list[list[Optional[int]]] = [[None] * g.n for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        entries[u][v] = f[i]
        entries[v][u] = f[i]
    row_sums = tuple(sum(x for x in row if x is not None) for row in entries)
    return LabelingMatrixView(tuple(tuple(r) for r in entries), row_sums)
