"""Training-free expressivity surrogate.

Message passing cannot separate more than iterated neighborhood refinement
does, so two graphs (or two augmented graphs) count as distinguishable
exactly when their refinement histograms differ. The histogram keys are
depth-n iterated signatures hashed to fixed-width digests; a verification
mode keeps exact interned signatures instead.

Real-valued RNI features are rejected here: they make all vertices distinct
almost surely, so the surrogate would report 1 for every pair and mean
nothing.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .augment import AugmentationSample, AugmentConfig, Method, clip_features, rp_features
from .errors import InvalidInputError, UnsupportedMethodError
from .graphs import Coloring, Graph, base_coloring
from .refinement import RefinementKind, color_refine
from .rng import derive_key
from .tree import (
    DEFAULT_NODE_BUDGET,
    SelectorKind,
    _fill_prefix,
    enumerate_tree,
    random_walk,
)

_DIGEST_SIZE = 16

# shared intern table so exact keys stay comparable across graphs
_EXACT_IDS: dict = {}


@dataclass(frozen=True)
class CrHistogram:
    """Multiset of (signature key, cell size) pairs after full refinement."""

    entries: tuple[tuple[object, int], ...]


def _root_bytes(color: int, row: tuple | None) -> bytes:
    if row is None:
        return repr(color).encode()
    return repr((color, tuple(row))).encode()


def _digest_keys(g: Graph, roots: list[bytes]) -> list[bytes]:
    adj = g._adj0
    cur = [
        hashlib.blake2b(r, digest_size=_DIGEST_SIZE).digest() for r in roots
    ]
    for _ in range(g.n):
        nxt = []
        for v in range(g.n):
            h = hashlib.blake2b(cur[v], digest_size=_DIGEST_SIZE)
            for d in sorted(cur[u] for u in adj[v]):
                h.update(d)
            nxt.append(h.digest())
        cur = nxt
    return cur


def _intern(key) -> int:
    got = _EXACT_IDS.get(key)
    if got is None:
        got = len(_EXACT_IDS)
        _EXACT_IDS[key] = got
    return got


def _exact_keys(g: Graph, roots: list[bytes]) -> list[int]:
    adj = g._adj0
    cur = [_intern(("root", r)) for r in roots]
    for _ in range(g.n):
        cur = [
            _intern((cur[v], tuple(sorted(cur[u] for u in adj[v]))))
            for v in range(g.n)
        ]
    return cur


def cr_histogram(
    g: Graph,
    pi: Coloring,
    sample: AugmentationSample | None = None,
    exact: bool = False,
) -> CrHistogram:
    """Signature histogram of (g, pi), optionally extended by a feature block.

    Colorings are compared by their 1..k values, so histograms of two graphs
    are comparable whenever their colorings were produced consistently (the
    synthetic families here are uniformly colored).
    """
    if pi.n != g.n:
        raise InvalidInputError("coloring does not match graph size")
    if sample is not None and len(sample.features) != g.n:
        raise InvalidInputError("sample does not match graph size")
    roots = [
        _root_bytes(
            pi.colors[v], None if sample is None else sample.features[v]
        )
        for v in range(g.n)
    ]
    keys = _exact_keys(g, roots) if exact else _digest_keys(g, roots)
    counts: dict = {}
    for key in keys:
        counts[key] = counts.get(key, 0) + 1
    return CrHistogram(tuple(sorted(counts.items())))


def _check_method(cfg: AugmentConfig) -> None:
    if cfg.method is Method.RNI:
        raise UnsupportedMethodError(
            "real-valued RNI features have no refinement signature; "
            "the surrogate supports the indicator methods only"
        )


def _indicator_rows(n: int, prefix: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * len(prefix) for _ in range(n)]
    for j, v in enumerate(prefix):
        rows[v - 1][j] = 1
    return tuple(tuple(r) for r in rows)


def histogram_distribution(
    g: Graph,
    pi: Coloring,
    cfg: AugmentConfig,
    exact_keys: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict[CrHistogram, Fraction]:
    """Exact distribution of the augmented histogram under one random draw."""
    _check_method(cfg)
    dist: dict[CrHistogram, Fraction] = {}

    def add(hist: CrHistogram, prob: Fraction) -> None:
        dist[hist] = dist.get(hist, Fraction(0)) + prob

    if cfg.method is Method.IRNI:
        if cfg.d > g.n:
            raise InvalidInputError(f"d={cfg.d} exceeds vertex count {g.n}")
        for node in enumerate_tree(
            g, pi, cfg.refinement, cfg.selector, depth_bound=cfg.d, node_budget=node_budget
        ):
            prefix = _fill_prefix(node.nu, node.coloring, cfg.d)
            rows = _indicator_rows(g.n, prefix)
            sample = AugmentationSample(Method.IRNI, rows, prefix, cfg.seed)
            add(cr_histogram(g, pi, sample, exact=exact_keys), node.probability)
    elif cfg.method is Method.RP:
        for node in enumerate_tree(
            g,
            Coloring.uniform(g.n),
            RefinementKind.OREF,
            SelectorKind.FIRST_LARGEST,
            depth_bound=g.n,
            node_budget=node_budget,
        ):
            prefix = _fill_prefix(node.nu, node.coloring, g.n)
            rows = _indicator_rows(g.n, prefix)
            sample = AugmentationSample(Method.RP, rows, prefix, cfg.seed)
            add(cr_histogram(g, pi, sample, exact=exact_keys), node.probability)
    elif cfg.method is Method.CLIP:
        refined = color_refine(g, pi, ())
        cells = refined.cells()
        width = max(len(c) for c in cells)
        total = Fraction(1)
        for c in cells:
            total /= factorial(len(c))
        for assignment in itertools.product(
            *(itertools.permutations(range(len(c))) for c in cells)
        ):
            index_of = [0] * g.n
            for cell, perm in zip(cells, assignment):
                for v, idx in zip(cell, perm):
                    index_of[v - 1] = idx
            rows = tuple(
                tuple(1 if j == index_of[v] else 0 for j in range(width))
                for v in range(g.n)
            )
            sample = AugmentationSample(Method.CLIP, rows, tuple(index_of), cfg.seed)
            add(cr_histogram(g, pi, sample, exact=exact_keys), total)
    else:
        raise InvalidInputError(f"unknown method {cfg.method!r}")
    return dist


def exact_distinguish(
    g1: Graph,
    g2: Graph,
    cfg: AugmentConfig,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Fraction:
    """Exact separation probability between the two histogram distributions.

    Computed as the total variation distance 1 - sum_h min(p1(h), p2(h)),
    i.e. the probability that the best coupling of the two draws still lands
    on different histograms. Isomorphic inputs give exactly 0; disjoint
    histogram supports give exactly 1.
    """
    if g1.n != g2.n:
        return Fraction(1)
    _check_method(cfg)
    pi1, pi2 = base_coloring(g1), base_coloring(g2)
    if cfg.method is Method.IRNI and cfg.d == 0:
        return Fraction(0 if cr_histogram(g1, pi1) == cr_histogram(g2, pi2) else 1)
    p1 = histogram_distribution(g1, pi1, cfg, node_budget=node_budget)
    p2 = histogram_distribution(g2, pi2, cfg, node_budget=node_budget)
    overlap = Fraction(0)
    for hist, p in p1.items():
        q = p2.get(hist)
        if q is not None:
            overlap += min(p, q)
    return 1 - overlap


def _draw_sample(
    g: Graph, pi: Coloring, cfg: AugmentConfig, stream: int, trial: int
) -> AugmentationSample:
    seed = derive_key(cfg.seed, stream)
    if cfg.method is Method.IRNI:
        walk = random_walk(
            g, pi, cfg.refinement, cfg.selector, d=cfg.d, rng_seed=seed, sample_index=trial
        )
        rows = _indicator_rows(g.n, walk.filled_prefix)
        return AugmentationSample(Method.IRNI, rows, walk.filled_prefix, seed)
    if cfg.method is Method.RP:
        return rp_features(g, seed, sample_index=trial)
    if cfg.method is Method.CLIP:
        return clip_features(g, pi, seed, sample_index=trial)
    raise InvalidInputError(f"unknown method {cfg.method!r}")


def distinguish_probability(
    g1: Graph, g2: Graph, cfg: AugmentConfig, trials: int
) -> float:
    """Monte Carlo estimate: fraction of independently drawn sample pairs whose
    augmented histograms differ. Deterministic given cfg.seed."""
    if trials < 1:
        raise InvalidInputError(f"trial count must be >= 1, got {trials}")
    _check_method(cfg)
    if g1.n != g2.n:
        return 1.0
    pi1, pi2 = base_coloring(g1), base_coloring(g2)
    if cfg.method is Method.IRNI and cfg.d == 0:
        return 0.0 if cr_histogram(g1, pi1) == cr_histogram(g2, pi2) else 1.0
    memo1: dict = {}
    memo2: dict = {}

    def hist_of(g, pi, cfg, stream, trial, memo):
        sample = _draw_sample(g, pi, cfg, stream, trial)
        key = sample.walk
        got = memo.get(key)
        if got is None:
            got = cr_histogram(g, pi, sample)
            memo[key] = got
        return got

    differing = 0
    for trial in range(1, trials + 1):
        h1 = hist_of(g1, pi1, cfg, 1, trial, memo1)
        h2 = hist_of(g2, pi2, cfg, 2, trial, memo2)
        if h1 != h2:
            differing += 1
    return differing / trials
