"""Independent brute-force oracles.

Everything here is deliberately written against the definitions, not the
library: the naive fixpoint iterates full neighbor-color multisets, and the
isomorphism check tries all vertex permutations. Slow, but trustworthy on
small graphs.
"""

from collections import Counter
from itertools import permutations


def naive_equitable_partition(n, edges, init_colors, individualize=()):
    """Coarsest equitable partition finer than the initial colors.

    Individualized vertices get their own artificial color per position
    before the fixpoint starts. Returns a frozenset of frozensets.
    """
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = {v: ("base", init_colors[v - 1]) for v in range(1, n + 1)}
    for i, v in enumerate(individualize):
        start[v] = ("indiv", i)
    ranks = {val: i for i, val in enumerate(sorted(set(start.values())))}
    colors = {v: ranks[start[v]] for v in start}
    while True:
        sigs = {
            v: (colors[v], tuple(sorted(Counter(colors[u] for u in adj[v]).items())))
            for v in colors
        }
        ranks = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[sigs[v]] for v in sigs}
        if len(set(new.values())) == len(set(colors.values())):
            colors = new
            break
        colors = new
    cells = {}
    for v, c in colors.items():
        cells.setdefault(c, set()).add(v)
    return frozenset(frozenset(cell) for cell in cells.values())


def brute_force_isomorphic(n1, edges1, colors1, n2, edges2, colors2):
    """Try every permutation; feasible for n <= 7 or so."""
    if n1 != n2 or len(edges1) != len(edges2):
        return False
    target = {(min(u, v), max(u, v)) for u, v in edges2}
    source = [(u, v) for u, v in edges1]
    for perm in permutations(range(1, n1 + 1)):
        if any(colors2[perm[v - 1] - 1] != colors1[v - 1] for v in range(1, n1 + 1)):
            continue
        mapped = {
            (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
            for u, v in source
        }
        if mapped == target:
            return True
    return False


def random_simple_graph(rng, n, p=0.4):
    """Edge list of a G(n, p) draw."""
    return [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]


def random_permutation(rng, n):
    """A permutation as the tuple (image of 1, ..., image of n)."""
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return tuple(images)
