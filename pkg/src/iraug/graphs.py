"""Graph and coloring data model, color encoding, and edge-color subdivision.

Vertices are numbered 1..n throughout. Graphs are undirected and simple;
colorings are surjective maps onto {1, ..., k}. Both types are immutable
after construction, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InvalidInputError

COLOR_ENCODING_MODULUS = 12345

# Leading feature entry may be any natural number (most significant digit);
# all following entries must be bits.
NodeFeatures = Sequence[Sequence[float]]


@dataclass(frozen=True, init=False)
class Graph:
    """Undirected simple graph with per-vertex colors.

    Fields:
        n: vertex count; vertices are 1..n.
        edges: canonically sorted (u, v) pairs with u < v, each edge once.
        base_colors: natural-number color per vertex.
        edge_colors: optional natural number per edge, aligned with ``edges``.
        subdivision_marker: True for vertices inserted by edge subdivision.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    base_colors: tuple[int, ...]
    edge_colors: tuple[int, ...] | None
    subdivision_marker: tuple[bool, ...]

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int]] = (),
        base_colors: Sequence[int] | None = None,
        edge_colors: Sequence[int] | None = None,
        subdivision_marker: Sequence[bool] | None = None,
    ) -> None:
        if n < 1:
            raise InvalidInputError(f"vertex count must be >= 1, got {n}")
        pairs = []
        for idx, (u, v) in enumerate(edges):
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise InvalidInputError(f"edge ({u}, {v}) has endpoint outside 1..{n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            pairs.append(((min(u, v), max(u, v)), idx))
        pairs.sort()
        canon_edges = tuple(p for p, _ in pairs)
        for i in range(1, len(canon_edges)):
            if canon_edges[i] == canon_edges[i - 1]:
                raise InvalidInputError(f"duplicate edge {canon_edges[i]}")
        if base_colors is None:
            base_colors = (1,) * n
        base_colors = tuple(int(c) for c in base_colors)
        if len(base_colors) != n:
            raise InvalidInputError("base_colors must assign a color to every vertex")
        if any(c < 0 for c in base_colors):
            raise InvalidInputError("vertex colors must be natural numbers")
        canon_ecolors: tuple[int, ...] | None = None
        if edge_colors is not None:
            if len(edge_colors) != len(canon_edges):
                raise InvalidInputError("edge_colors must assign a color to every edge")
            by_input = list(edge_colors)
            canon_ecolors = tuple(int(by_input[idx]) for _, idx in pairs)
            if any(c < 0 for c in canon_ecolors):
                raise InvalidInputError("edge colors must be natural numbers")
        if subdivision_marker is None:
            marker = (False,) * n
        else:
            marker = tuple(bool(b) for b in subdivision_marker)
            if len(marker) != n:
                raise InvalidInputError("subdivision_marker must cover every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", canon_edges)
        object.__setattr__(self, "base_colors", base_colors)
        object.__setattr__(self, "edge_colors", canon_ecolors)
        object.__setattr__(self, "subdivision_marker", marker)
        degs = [0] * (n + 1)
        for u, v in canon_edges:
            degs[u] += 1
            degs[v] += 1
        for v in range(1, n + 1):
            if marker[v - 1] and degs[v] != 2:
                raise InvalidInputError(
                    f"subdivision vertex {v} has degree {degs[v]}, expected 2"
                )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor tuples indexed by vertex; index 0 is unused."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)

    @cached_property
    def _adj0(self) -> list[list[int]]:
        """0-indexed adjacency lists for the refinement kernel."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u - 1].append(v - 1)
            adj[v - 1].append(u - 1)
        return adj

    @cached_property
    def _csr(self):
        """CSR adjacency (indptr, indices) as numpy arrays, built on demand."""
        import numpy as np

        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, ns in enumerate(self._adj0):
            indptr[v + 1] = indptr[v] + len(ns)
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        for v, ns in enumerate(self._adj0):
            indices[indptr[v] : indptr[v + 1]] = ns
        return indptr, indices

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise InvalidInputError(f"vertex {v} outside 1..{self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def permuted(self, sigma: Sequence[int]) -> "Graph":
        """Relabel by ``sigma`` where sigma[v-1] is the image of vertex v."""
        if sorted(sigma) != list(range(1, self.n + 1)):
            raise InvalidInputError("sigma must be a permutation of 1..n")
        colors = [0] * self.n
        marker = [False] * self.n
        for v in range(1, self.n + 1):
            colors[sigma[v - 1] - 1] = self.base_colors[v - 1]
            marker[sigma[v - 1] - 1] = self.subdivision_marker[v - 1]
        edges = [(sigma[u - 1], sigma[v - 1]) for u, v in self.edges]
        return Graph(self.n, edges, colors, self.edge_colors, marker)


@dataclass(frozen=True, init=False)
class Coloring:
    """Surjective vertex coloring onto {1, ..., k}; colors[v-1] is pi(v)."""

    colors: tuple[int, ...]

    def __init__(self, colors: Sequence[int]) -> None:
        colors = tuple(int(c) for c in colors)
        if not colors:
            raise InvalidInputError("coloring needs at least one vertex")
        k = max(colors)
        if min(colors) < 1 or len(set(colors)) != k:
            raise InvalidInputError("coloring must be surjective onto 1..k")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_values(cls, values: Sequence) -> "Coloring":
        """Compact arbitrary comparable values to 1..k, preserving their order."""
        ranks = {val: i + 1 for i, val in enumerate(sorted(set(values)))}
        return cls(tuple(ranks[val] for val in values))

    @classmethod
    def uniform(cls, n: int) -> "Coloring":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return max(self.colors)

    @property
    def is_discrete(self) -> bool:
        return self.k == self.n

    def color_of(self, v: int) -> int:
        if not (1 <= v <= self.n):
            raise InvalidInputError(f"vertex {v} outside 1..{self.n}")
        return self.colors[v - 1]

    @cached_property
    def _cells(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors, start=1):
            buckets[c - 1].append(v)
        return tuple(tuple(b) for b in buckets)

    def cells(self) -> tuple[tuple[int, ...], ...]:
        """All cells in color order; cell i holds the vertices of color i+1."""
        return self._cells

    def cell(self, color: int) -> tuple[int, ...]:
        if not (1 <= color <= self.k):
            raise InvalidInputError(f"color {color} outside 1..{self.k}")
        return self._cells[color - 1]

    def partition(self) -> frozenset[frozenset[int]]:
        """The cell structure with color names forgotten."""
        return frozenset(frozenset(c) for c in self._cells)

    def permuted(self, sigma: Sequence[int]) -> "Coloring":
        """The coloring sigma(pi) with sigma(pi)(sigma(v)) = pi(v)."""
        out = [0] * self.n
        for v in range(1, self.n + 1):
            out[sigma[v - 1] - 1] = self.colors[v - 1]
        return Coloring(out)


def base_coloring(g: Graph) -> Coloring:
    """The graph's own vertex colors, compacted to 1..k."""
    return Coloring.from_values(g.base_colors)


def encode_colors(features: NodeFeatures) -> Coloring:
    """Read per-vertex feature vectors as binary numbers and compact to colors.

    The first entry is the highest-order digit and may be any natural number;
    all later entries must be bits. Encoded values are reduced modulo
    ``COLOR_ENCODING_MODULUS`` before compaction, so equal feature vectors
    always receive equal colors while distinct ones may collide.
    """
    values = []
    dim = None
    for row in features:
        row = list(row)
        if not row:
            raise InvalidInputError("feature vectors must be non-empty")
        if dim is None:
            dim = len(row)
        elif len(row) != dim:
            raise InvalidInputError(
                f"feature vectors must share one dimension, got {len(row)} and {dim}"
            )
        enc = 0
        for pos, entry in enumerate(row):
            if entry < 0:
                raise InvalidInputError(f"negative feature entry {entry!r}")
            if pos == 0:
                if float(entry) != int(entry):
                    raise InvalidInputError(
                        f"leading feature entry must be a natural number, got {entry!r}"
                    )
                digit = int(entry)
            elif entry in (0, 1):
                digit = int(entry)
            else:
                raise InvalidInputError(
                    f"non-binary entry {entry!r} allowed only in the leading position"
                )
            # doubling the leading digit d-1 times makes it the most
            # significant position of the binary read
            enc = enc * 2 + digit
        values.append(enc % COLOR_ENCODING_MODULUS)
    return Coloring.from_values(values)


def subdivide_edge_colors(g: Graph) -> Graph:
    """Replace each colored edge {u, v} by a marked midpoint vertex.

    The midpoint of edge i gets color max(vertex colors) + edge_color + 1, so
    edge-derived colors never collide with vertex colors. Original vertices
    keep their colors and markers stay False.
    """
    if g.edge_colors is None:
        raise InvalidInputError("graph has no edge colors to subdivide")
    if any(g.subdivision_marker):
        raise InvalidInputError("graph already contains subdivision vertices")
    offset = max(g.base_colors) + 1
    n2 = g.n + g.m
    edges = []
    colors = list(g.base_colors)
    marker = [False] * g.n
    for i, (u, v) in enumerate(g.edges):
        s = g.n + 1 + i
        edges.append((u, s))
        edges.append((s, v))
        colors.append(offset + g.edge_colors[i])
        marker.append(True)
    return Graph(n2, edges, colors, None, marker)
