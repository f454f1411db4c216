"""Refinement functions over colored graphs and coloring predicates.

The central operation is :func:`color_refine`, which computes the unique
coarsest equitable coloring finer than the input in which every vertex of
the individualization sequence sits in its own artificial singleton cell.
Its worklist kernel runs in O((n+m) log n); the equivalent naive fixpoint
iteration is deliberately *not* implemented here so that tests can keep an
independent oracle.

All color names are canonical: isomorphic inputs receive colorings that
correspond exactly under the isomorphism. Names are ordered by input color
first; vertices individualized by ``nu`` occupy a reserved band above all
ordinary colors, ordered by their position in ``nu``.
"""

from __future__ import annotations

from enum import Enum
from heapq import heappush, heappop
from typing import Sequence

from .errors import InvalidInputError
from .graphs import Coloring, Graph

IndividualizationSeq = tuple[int, ...]

# splitter cells at least this heavy (total degree) are counted with numpy
_NUMPY_SPLITTER_MIN_DEGREE = 1024


class RefinementKind(Enum):
    """The four refinement functions."""

    CREF = "cref"
    TREF = "tref"
    OREF = "oref"
    CTREF = "ctref"


def _check_nu(g: Graph, nu: Sequence[int]) -> IndividualizationSeq:
    nu = tuple(nu)
    for v in nu:
        if not (1 <= v <= g.n):
            raise InvalidInputError(f"individualized vertex {v} outside 1..{g.n}")
    if len(set(nu)) != len(nu):
        raise InvalidInputError(f"duplicate vertex in individualization sequence {nu}")
    return nu


def _check_coloring(g: Graph, pi: Coloring) -> None:
    if pi.n != g.n:
        raise InvalidInputError(
            f"coloring covers {pi.n} vertices but graph has {g.n}"
        )


def _initial_cells(g: Graph, pi: Coloring, nu: IndividualizationSeq) -> list[list[int]]:
    """Ordered initial partition, 0-indexed: pi's cells minus nu, then nu singletons."""
    individualized = set(nu)
    cells = []
    for cell in pi.cells():
        rest = [v - 1 for v in cell if v not in individualized]
        if rest:
            cells.append(rest)
    for v in nu:
        cells.append([v - 1])
    return cells


def _refine_kernel(g: Graph, init_cells: list[list[int]]) -> list[int]:
    """Worklist partition refinement; returns 0-indexed vertex -> cell start.

    Cells live in contiguous segments of a vertex array and are identified by
    their start offset, which doubles as a canonical color name: a cell keeps
    its start when it splits, fragments are ordered by neighbor count towards
    the splitter, and pending splitters are processed smallest-start first.
    Every step therefore depends only on isomorphism-invariant data, which
    makes the final names canonical. When a cell splits, all fragments except
    the largest join the worklist (Hopcroft's rule), giving the
    O((n+m) log n) bound.
    """
    n = g.n
    adj = g._adj0
    vert: list[int] = []
    color = [0] * n
    cell_len = [0] * n
    pos = [0] * n
    for cell in init_cells:
        s = len(vert)
        cell_len[s] = len(cell)
        for v in cell:
            color[v] = s
            pos[v] = len(vert)
            vert.append(v)
    ncells = len(init_cells)
    cnt = [0] * n
    in_heap = [False] * n
    heap: list[int] = []
    for cell in init_cells:
        s = color[cell[0]]
        in_heap[s] = True
        heappush(heap, s)
    csr = None

    while heap and ncells < n:
        s = heappop(heap)
        if not in_heap[s]:
            continue
        in_heap[s] = False
        clen_s = cell_len[s]

        if clen_s == 1:
            # singleton splitter: every neighbor is hit exactly once, so no
            # counting, no sorting, and at most a two-way split per cell
            w = vert[s]
            affected: dict[int, list[int]] = {}
            for u in adj[w]:
                cs = color[u]
                if cs in affected:
                    affected[cs].append(u)
                else:
                    affected[cs] = [u]
            for cs in sorted(affected):
                us = affected[cs]
                t = len(us)
                clen = cell_len[cs]
                if t == clen:
                    continue
                hi = cs + clen
                boundary = hi - t
                misplaced = [u for u in us if pos[u] < boundary]
                if misplaced:
                    us_set = set(us)
                    k = 0
                    for i in range(boundary, hi):
                        v = vert[i]
                        if v not in us_set:
                            u = misplaced[k]
                            k += 1
                            iu = pos[u]
                            vert[iu] = v
                            vert[i] = u
                            pos[v] = iu
                            pos[u] = i
                            if k == len(misplaced):
                                break
                cell_len[cs] = boundary - cs
                cell_len[boundary] = t
                for i in range(boundary, hi):
                    color[vert[i]] = boundary
                ncells += 1
                if in_heap[cs]:
                    push = boundary
                else:
                    # non-neighbors fragment comes first and wins size ties
                    push = boundary if boundary - cs >= t else cs
                if not in_heap[push]:
                    in_heap[push] = True
                    heappush(heap, push)
                if ncells == n:
                    break
            continue

        splitter = vert[s : s + clen_s]
        touched: list[int] = []
        heavy = clen_s > 64 and sum(len(adj[w]) for w in splitter) >= _NUMPY_SPLITTER_MIN_DEGREE
        if heavy:
            import numpy as np

            if csr is None:
                csr = g._csr
            indptr, indices = csr
            vs = np.asarray(splitter, dtype=np.int64)
            starts = indptr[vs]
            lens = indptr[vs + 1] - starts
            total = int(lens.sum())
            offsets = np.repeat(starts - np.concatenate(([0], np.cumsum(lens)[:-1])), lens)
            nbrs = indices[offsets + np.arange(total)]
            cnt_np = np.bincount(nbrs, minlength=n)
            touched_np = np.nonzero(cnt_np)[0]
            counts = cnt_np[touched_np].tolist()
            touched = touched_np.tolist()
            for u, c in zip(touched, counts):
                cnt[u] = c
        else:
            for w in splitter:
                for u in adj[w]:
                    c = cnt[u]
                    if c == 0:
                        touched.append(u)
                    cnt[u] = c + 1

        affected = {}
        for u in touched:
            cs = color[u]
            if cs in affected:
                affected[cs].append(u)
            else:
                affected[cs] = [u]
        for cs in sorted(affected):
            us = affected[cs]
            t = len(us)
            clen = cell_len[cs]
            hi = cs + clen
            if t == clen:
                c0 = cnt[us[0]]
                if all(cnt[u] == c0 for u in us):
                    continue
                boundary = cs
            else:
                # move touched vertices into the tail [boundary, hi)
                boundary = hi - t
                misplaced = [u for u in us if pos[u] < boundary]
                if misplaced:
                    k = 0
                    for i in range(boundary, hi):
                        v = vert[i]
                        if cnt[v] == 0:
                            u = misplaced[k]
                            k += 1
                            iu = pos[u]
                            vert[iu] = v
                            vert[i] = u
                            pos[v] = iu
                            pos[u] = i
                            if k == len(misplaced):
                                break
            seg = vert[boundary:hi]
            seg.sort(key=cnt.__getitem__)
            vert[boundary:hi] = seg
            for i in range(boundary, hi):
                pos[vert[i]] = i
            frags = []
            if boundary > cs:
                frags.append((cs, boundary - cs))
            fs = boundary
            prev = cnt[seg[0]]
            for off in range(1, hi - boundary):
                c = cnt[seg[off]]
                if c != prev:
                    frags.append((fs, boundary + off - fs))
                    fs = boundary + off
                    prev = c
            frags.append((fs, hi - fs))
            if len(frags) == 1:
                continue
            cell_len[cs] = frags[0][1]
            for fs2, fl in frags[1:]:
                cell_len[fs2] = fl
                for i in range(fs2, fs2 + fl):
                    color[vert[i]] = fs2
            ncells += len(frags) - 1
            if in_heap[cs]:
                for fs2, _ in frags[1:]:
                    if not in_heap[fs2]:
                        in_heap[fs2] = True
                        heappush(heap, fs2)
            else:
                bi = 0
                bl = frags[0][1]
                for j in range(1, len(frags)):
                    if frags[j][1] > bl:
                        bi = j
                        bl = frags[j][1]
                for j, (fs2, _) in enumerate(frags):
                    if j != bi and not in_heap[fs2]:
                        in_heap[fs2] = True
                        heappush(heap, fs2)
            if ncells == n:
                break
        for u in touched:
            cnt[u] = 0
    return color


def _coloring_from_starts(starts: list[int]) -> Coloring:
    rank = {s: i + 1 for i, s in enumerate(sorted(set(starts)))}
    return Coloring(tuple(rank[s] for s in starts))


def color_refine(g: Graph, pi: Coloring, nu: Sequence[int] = ()) -> Coloring:
    """Coarsest equitable coloring finer than pi individualizing nu."""
    _check_coloring(g, pi)
    nu = _check_nu(g, nu)
    starts = _refine_kernel(g, _initial_cells(g, pi, nu))
    return _coloring_from_starts(starts)


def trivial_refine(g: Graph, pi: Coloring, nu: Sequence[int] = ()) -> Coloring:
    """pi with each nu vertex moved to a fresh artificial singleton; no refinement."""
    _check_coloring(g, pi)
    nu = _check_nu(g, nu)
    out = [0] * g.n
    for i, cell in enumerate(_initial_cells(g, pi, nu), start=1):
        for v in cell:
            out[v] = i
    return Coloring(out)


def oblivious_refine(g: Graph, pi: Coloring, nu: Sequence[int] = ()) -> Coloring:
    """Trivial refinement of the uniform coloring; pi is deliberately ignored."""
    _check_coloring(g, pi)
    return trivial_refine(g, Coloring.uniform(g.n), nu)


def cr_then_trivial_refine(g: Graph, pi: Coloring, nu: Sequence[int] = ()) -> Coloring:
    """Color refinement with empty sequence, then trivial individualization of nu."""
    _check_coloring(g, pi)
    nu = _check_nu(g, nu)
    return trivial_refine(g, color_refine(g, pi, ()), nu)


_DISPATCH = {
    RefinementKind.CREF: color_refine,
    RefinementKind.TREF: trivial_refine,
    RefinementKind.OREF: oblivious_refine,
    RefinementKind.CTREF: cr_then_trivial_refine,
}


def refine(kind: RefinementKind, g: Graph, pi: Coloring, nu: Sequence[int] = ()) -> Coloring:
    return _DISPATCH[kind](g, pi, nu)


def is_equitable(g: Graph, pi: Coloring) -> bool:
    """True iff all equally colored vertices see every color equally often."""
    _check_coloring(g, pi)
    profile: dict[int, dict[int, int]] = {}
    for v in range(1, g.n + 1):
        counts: dict[int, int] = {}
        for u in g.adjacency[v]:
            cu = pi.colors[u - 1]
            counts[cu] = counts.get(cu, 0) + 1
        c = pi.colors[v - 1]
        if c in profile:
            if profile[c] != counts:
                return False
        else:
            profile[c] = counts
    return True


def is_finer(pi: Coloring, pi2: Coloring) -> bool:
    """True iff equal pi-colors imply equal pi2-colors."""
    if pi.n != pi2.n:
        raise InvalidInputError("colorings cover different vertex sets")
    image: dict[int, int] = {}
    for c, c2 in zip(pi.colors, pi2.colors):
        if c in image:
            if image[c] != c2:
                return False
        else:
            image[c] = c2
    return True
