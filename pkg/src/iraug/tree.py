"""Cell selectors, search-tree enumeration, random walks, leaf certificates.

A tree node is an individualization sequence nu; its children extend nu by
one vertex of the cell picked by the selector on the refined coloring. A
leaf is a node with no selectable cell, which for color refinement means
the refined coloring is discrete. Random root-to-leaf walks pick children
uniformly; their leaf coloring is an isomorphism-invariant random variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BudgetExceededError, InternalError, InvalidInputError
from .graphs import Coloring, Graph, base_coloring
from .refinement import IndividualizationSeq, RefinementKind, refine
from .rng import child_index

DEFAULT_NODE_BUDGET = 200_000

LeafCertificate = bytes


class SelectorKind(Enum):
    """Cell selection strategies."""

    FIRST_LARGEST = "first-largest"
    PLANAR_MIN_DEGREE = "planar"


def _eligible_cells(g: Graph, pi: Coloring) -> list[int]:
    """Colors of non-singleton cells that contain no subdivision vertices."""
    out = []
    for color, cell in enumerate(pi.cells(), start=1):
        if len(cell) < 2:
            continue
        if any(g.subdivision_marker[v - 1] for v in cell):
            continue
        out.append(color)
    return out


def _first_largest(pi: Coloring, eligible: list[int]) -> int:
    best = eligible[0]
    best_size = len(pi.cell(best))
    for color in eligible[1:]:
        size = len(pi.cell(color))
        if size > best_size:
            best, best_size = color, size
    return best


def select_cell(
    kind: SelectorKind, g: Graph, pi: Coloring, nu: Sequence[int] = ()
) -> int | None:
    """Pick the color of the cell to branch on, or None at a leaf.

    FIRST_LARGEST takes the largest eligible cell, ties going to the
    smallest color. PLANAR_MIN_DEGREE starts from the eligible cell of
    minimum vertex degree and afterwards insists on cells consisting of
    neighbors of the first individualized vertex, falling back to
    FIRST_LARGEST when no such cell exists.
    """
    eligible = _eligible_cells(g, pi)
    if not eligible:
        return None
    if kind is SelectorKind.FIRST_LARGEST:
        return _first_largest(pi, eligible)
    if kind is SelectorKind.PLANAR_MIN_DEGREE:
        if not nu:
            best = None
            best_deg = -1
            for color in eligible:
                cell = pi.cell(color)
                degs = {g.degree(v) for v in cell}
                if len(degs) != 1:
                    raise InternalError(
                        f"cell {color} mixes vertex degrees {sorted(degs)}; "
                        "the minimum-degree selector needs degree-homogeneous cells"
                    )
                deg = degs.pop()
                if best is None or deg < best_deg:
                    best, best_deg = color, deg
            return best
        anchor_nbrs = set(g.neighbors(nu[0]))
        for color in eligible:
            if all(v in anchor_nbrs for v in pi.cell(color)):
                return color
        return _first_largest(pi, eligible)
    raise InvalidInputError(f"unknown selector {kind!r}")


def children(
    g: Graph,
    pi: Coloring,
    nu: Sequence[int],
    refinement: RefinementKind = RefinementKind.CREF,
    selector: SelectorKind = SelectorKind.FIRST_LARGEST,
) -> list[IndividualizationSeq]:
    """All one-vertex extensions of nu; empty at a leaf."""
    nu = tuple(nu)
    refined = refine(refinement, g, pi, nu)
    color = select_cell(selector, g, refined, nu)
    if color is None:
        return []
    return [nu + (v,) for v in refined.cell(color)]


@dataclass(frozen=True)
class WalkResult:
    """Outcome of one random walk, truncated to at most d individualizations.

    ``nu`` is the walk itself; ``natural_length`` is its length (the leaf
    depth, or d if the walk was cut off first). ``filled_prefix`` always
    holds exactly d distinct vertices: the walk, extended in increasing
    leaf-color order when a leaf was reached early. ``leaf_coloring`` is the
    refined coloring at the final node.
    """

    nu: IndividualizationSeq
    leaf_coloring: Coloring
    filled_prefix: tuple[int, ...]
    natural_length: int


def _fill_prefix(
    nu: IndividualizationSeq, leaf_coloring: Coloring, d: int
) -> tuple[int, ...]:
    """Extend nu to exactly d vertices in increasing leaf-color order."""
    if len(nu) >= d:
        return nu[:d]
    if not leaf_coloring.is_discrete:
        raise InternalError(
            "fill-up needs a discrete coloring to order the remaining vertices"
        )
    chosen = set(nu)
    rest = sorted(
        (v for v in range(1, leaf_coloring.n + 1) if v not in chosen),
        key=leaf_coloring.color_of,
    )
    return nu + tuple(rest[: d - len(nu)])


def random_walk(
    g: Graph,
    pi: Coloring,
    refinement: RefinementKind = RefinementKind.CREF,
    selector: SelectorKind = SelectorKind.FIRST_LARGEST,
    d: int = 0,
    rng_seed: int = 0,
    sample_index: int = 1,
) -> WalkResult:
    """Random root-to-leaf walk, stopped at a leaf or after d individualizations.

    Child choices are keyed on (rng_seed, sample_index, depth), so results
    are reproducible, prefix-consistent across depth bounds, and independent
    across sample indices.
    """
    if d < 0:
        raise InvalidInputError(f"depth bound must be >= 0, got {d}")
    if d > g.n:
        raise InvalidInputError(f"depth bound {d} exceeds vertex count {g.n}")
    nu: IndividualizationSeq = ()
    while True:
        refined = refine(refinement, g, pi, nu)
        if len(nu) == d:
            break
        color = select_cell(selector, g, refined, nu)
        if color is None:
            break
        cell = refined.cell(color)
        nu = nu + (cell[child_index(rng_seed, sample_index, len(nu), len(cell))],)
    return WalkResult(
        nu=nu,
        leaf_coloring=refined,
        filled_prefix=_fill_prefix(nu, refined, d),
        natural_length=len(nu),
    )


@dataclass(frozen=True)
class TreeNode:
    """A stopped node of an exhaustive enumeration with its walk probability."""

    nu: IndividualizationSeq
    coloring: Coloring
    probability: Fraction
    is_leaf: bool


def enumerate_tree(
    g: Graph,
    pi: Coloring,
    refinement: RefinementKind = RefinementKind.CREF,
    selector: SelectorKind = SelectorKind.FIRST_LARGEST,
    depth_bound: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Iterator[TreeNode]:
    """Depth-first enumeration of all walk endpoints with exact probabilities.

    Yields every leaf (and every node at depth_bound, when given) together
    with the probability that a uniform random walk stops there. Intended
    for small graphs; raises BudgetExceededError past node_budget nodes.
    """
    if depth_bound is not None and depth_bound > g.n:
        raise InvalidInputError(f"depth bound {depth_bound} exceeds vertex count {g.n}")
    visited = 0

    def walk(nu: IndividualizationSeq, prob: Fraction) -> Iterator[TreeNode]:
        nonlocal visited
        visited += 1
        if visited > node_budget:
            raise BudgetExceededError(
                f"tree enumeration exceeded node budget {node_budget}"
            )
        refined = refine(refinement, g, pi, nu)
        color = select_cell(selector, g, refined, nu)
        if color is None or (depth_bound is not None and len(nu) == depth_bound):
            yield TreeNode(nu, refined, prob, is_leaf=color is None)
            return
        cell = refined.cell(color)
        share = prob / len(cell)
        for v in cell:
            yield from walk(nu + (v,), share)

    yield from walk((), Fraction(1))


def leaf_certificate(g: Graph, pi: Coloring, leaf_coloring: Coloring) -> LeafCertificate:
    """Canonical byte string for a leaf: relabeled adjacency plus initial colors.

    Vertices are relabeled by their (discrete) leaf color; the certificate is
    the relabeled adjacency matrix row-major, followed by the relabeled
    initial coloring. Leaves related by a color-preserving isomorphism yield
    identical certificates.
    """
    if not leaf_coloring.is_discrete:
        raise InvalidInputError("leaf certificates require a discrete coloring")
    if leaf_coloring.n != g.n or pi.n != g.n:
        raise InvalidInputError("coloring does not match graph size")
    n = g.n
    by_rank = sorted(range(1, n + 1), key=leaf_coloring.color_of)
    bits = bytearray()
    for u in by_rank:
        row = set(g.adjacency[u])
        bits.extend(1 if v in row else 0 for v in by_rank)
    head = n.to_bytes(4, "big")
    colors = b"".join(pi.color_of(v).to_bytes(4, "big") for v in by_rank)
    return head + bytes(bits) + colors


def enumerate_leaves(
    g: Graph,
    pi: Coloring,
    refinement: RefinementKind = RefinementKind.CREF,
    selector: SelectorKind = SelectorKind.FIRST_LARGEST,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[LeafCertificate]:
    """Certificates of all leaves, as a multiset (sorted list)."""
    certs = [
        leaf_certificate(g, pi, node.coloring)
        for node in enumerate_tree(
            g, pi, refinement, selector, node_budget=node_budget
        )
    ]
    certs.sort()
    return certs


def isomorphic(g1: Graph, g2: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Exact isomorphism test for small graphs via minimum leaf certificates."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    c1 = min(enumerate_leaves(g1, base_coloring(g1), node_budget=node_budget))
    c2 = min(enumerate_leaves(g2, base_coloring(g2), node_budget=node_budget))
    return c1 == c2
