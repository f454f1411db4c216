"""Synthetic graph generators and graph text-file I/O.

File format, one graph per file, whitespace-separated ASCII decimal:

    p <n> <m> <has_edge_colors:0|1>
    v <id> <color> <marker:0|1>      (one line per vertex, ids 1..n)
    e <u> <v> [<edge_color>]         (each undirected edge once)
"""

from __future__ import annotations

import math
import random
from pathlib import Path

from .errors import InvalidInputError
from .graphs import Graph


def gen_csl(n: int, skip: int) -> Graph:
    """Cycle on n vertices plus chords at a fixed co-prime skip.

    These are 4-regular and vertex-transitive, so plain color refinement
    sees every skip as a single cell. The classic configuration is n=41.
    """
    if n < 5:
        raise InvalidInputError(f"cycle length must be >= 5, got {n}")
    if not (2 <= skip <= n - 2):
        raise InvalidInputError(f"skip {skip} outside 2..{n - 2}")
    if math.gcd(skip, n) != 1:
        raise InvalidInputError(f"skip {skip} is not co-prime with {n}")
    edges = set()
    for i in range(n):
        for step in (1, skip):
            u, v = i + 1, (i + step) % n + 1
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def gen_circulant(n: int, skips: tuple[int, ...] | list[int]) -> Graph:
    """General circulant: vertex i is adjacent to i +- s for every skip s."""
    if n < 3:
        raise InvalidInputError(f"vertex count must be >= 3, got {n}")
    if not skips:
        raise InvalidInputError("at least one skip is required")
    edges = set()
    for s in skips:
        if not (1 <= s <= n - 1):
            raise InvalidInputError(f"skip {s} outside 1..{n - 1}")
        for i in range(n):
            u, v = i + 1, (i + s) % n + 1
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"cycle length must be >= 3, got {n}")
    return Graph(n, [(i + 1, (i + 1) % n + 1) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError(f"vertex count must be >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph: each pair is an edge independently with probability p."""
    if not (0.0 <= p <= 1.0):
        raise InvalidInputError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def gen_random_regular(n: int, degree: int, seed: int) -> Graph:
    """Random regular graph by the pairing model, rejecting loops and repeats."""
    if degree < 0 or degree >= n:
        raise InvalidInputError(f"degree {degree} impossible on {n} vertices")
    if (n * degree) % 2 != 0:
        raise InvalidInputError("n * degree must be even")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(1, n + 1) for _ in range(degree)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, sorted(edges))


def _antiprism_icosahedron() -> list[tuple[int, int]]:
    # two 5-cycles u0..u4 (1..5) and w0..w4 (6..10) joined as an antiprism,
    # plus apexes 11 (upper) and 12 (lower)
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))
        edges.append((i + 6, (i + 1) % 5 + 6))
        edges.append((i + 1, i + 6))
        edges.append((i + 1, (i + 1) % 5 + 6))
        edges.append((11, i + 1))
        edges.append((12, i + 6))
    return edges


def _lcf(n: int, shifts: list[int], reps: int) -> list[tuple[int, int]]:
    # Hamiltonian cycle 1..n plus chords i -> i + shift
    edges = {(i + 1, (i + 1) % n + 1) for i in range(n)}
    seq = shifts * reps
    for i, shift in enumerate(seq):
        u, v = i + 1, (i + shift) % n + 1
        edges.add((min(u, v), max(u, v)))
    return sorted(edges)


_PLATONIC = {
    "tetrahedron": lambda: gen_complete(4),
    "cube": lambda: Graph(
        8,
        [
            (u + 1, v + 1)
            for u in range(8)
            for v in range(u + 1, 8)
            if bin(u ^ v).count("1") == 1
        ],
    ),
    "octahedron": lambda: Graph(
        6,
        [
            (u, v)
            for u in range(1, 7)
            for v in range(u + 1, 7)
            if u + 3 != v
        ],
    ),
    "dodecahedron": lambda: Graph(
        20, _lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)
    ),
    "icosahedron": lambda: Graph(12, _antiprism_icosahedron()),
}


def gen_platonic(name: str) -> Graph:
    """Skeleton of one of the five platonic solids."""
    try:
        return _PLATONIC[name.lower()]()
    except KeyError:
        raise InvalidInputError(
            f"unknown solid {name!r}; choose from {sorted(_PLATONIC)}"
        ) from None


def count_triangles(g: Graph) -> int:
    """Exact triangle count by neighbor intersection over edges."""
    total = 0
    nbrs = [set(g.adjacency[v]) for v in range(g.n + 1)]
    for u, v in g.edges:
        total += len(nbrs[u] & nbrs[v])
    return total // 3


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    has_ec = 1 if g.edge_colors is not None else 0
    lines = [f"p {g.n} {g.m} {has_ec}"]
    for v in range(1, g.n + 1):
        lines.append(
            f"v {v} {g.base_colors[v - 1]} {1 if g.subdivision_marker[v - 1] else 0}"
        )
    for i, (u, v) in enumerate(g.edges):
        if has_ec:
            lines.append(f"e {u} {v} {g.edge_colors[i]}")
        else:
            lines.append(f"e {u} {v}")
    path.write_text("\n".join(lines) + "\n", encoding="ascii")


def _parse_error(path: Path, lineno: int, msg: str) -> InvalidInputError:
    return InvalidInputError(f"{path}:{lineno}: {msg}")


def read_graph(path: str | Path) -> Graph:
    """Parse a graph file; raises InvalidInputError with the offending line."""
    path = Path(path)
    n = m = None
    has_ec = False
    colors: dict[int, int] = {}
    markers: dict[int, bool] = {}
    edges: list[tuple[int, int]] = []
    ecolors: list[int] = []
    for lineno, raw in enumerate(path.read_text(encoding="ascii").splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise _parse_error(path, lineno, "duplicate header")
            if len(parts) != 4:
                raise _parse_error(path, lineno, f"malformed header {raw!r}")
            try:
                n, m, ec = (int(x) for x in parts[1:])
            except ValueError:
                raise _parse_error(path, lineno, f"malformed header {raw!r}") from None
            if ec not in (0, 1):
                raise _parse_error(path, lineno, "edge-color flag must be 0 or 1")
            has_ec = bool(ec)
        elif tag == "v":
            if n is None:
                raise _parse_error(path, lineno, "vertex line before header")
            if len(parts) != 4:
                raise _parse_error(path, lineno, f"malformed vertex line {raw!r}")
            try:
                vid, color, marker = (int(x) for x in parts[1:])
            except ValueError:
                raise _parse_error(path, lineno, f"malformed vertex line {raw!r}") from None
            if not (1 <= vid <= n):
                raise _parse_error(path, lineno, f"vertex id {vid} outside 1..{n}")
            if vid in colors:
                raise _parse_error(path, lineno, f"duplicate vertex {vid}")
            if marker not in (0, 1):
                raise _parse_error(path, lineno, "marker must be 0 or 1")
            colors[vid] = color
            markers[vid] = bool(marker)
        elif tag == "e":
            if n is None:
                raise _parse_error(path, lineno, "edge line before header")
            want = 4 if has_ec else 3
            if len(parts) != want:
                raise _parse_error(path, lineno, f"malformed edge line {raw!r}")
            try:
                nums = [int(x) for x in parts[1:]]
            except ValueError:
                raise _parse_error(path, lineno, f"malformed edge line {raw!r}") from None
            u, v = nums[0], nums[1]
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise _parse_error(path, lineno, f"edge ({u}, {v}) outside 1..{n}")
            edges.append((u, v))
            if has_ec:
                ecolors.append(nums[2])
        else:
            raise _parse_error(path, lineno, f"unknown line type {tag!r}")
    if n is None:
        raise _parse_error(path, 1, "missing header")
    if len(colors) != n:
        raise _parse_error(path, 1, f"expected {n} vertex lines, got {len(colors)}")
    if len(edges) != m:
        raise _parse_error(path, 1, f"expected {m} edge lines, got {len(edges)}")
    try:
        return Graph(
            n,
            edges,
            [colors[v] for v in range(1, n + 1)],
            ecolors if has_ec else None,
            [markers[v] for v in range(1, n + 1)],
        )
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from None
