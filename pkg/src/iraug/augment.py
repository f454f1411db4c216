"""The four random data augmentation encoders and ensembling over randomness.

Each encoder appends per-vertex feature columns derived from one random
draw. Appended features are kept as a separate block, never merged into the
base colors, so consumers can concatenate in whatever order they need.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import InvalidInputError
from .graphs import Coloring, Graph
from .refinement import RefinementKind, color_refine
from .rng import derive_key
from .tree import SelectorKind, random_walk


class Method(Enum):
    IRNI = "irni"
    RNI = "rni"
    CLIP = "clip"
    RP = "rp"


@dataclass(frozen=True)
class RniDistribution:
    """Named scalar distribution for random node initialization draws.

    Supported: uniform(low, high), normal(mean, std), randint(low, high)
    with inclusive bounds, and constant(value).
    """

    name: str = "uniform"
    params: tuple[float, ...] = (0.0, 1.0)

    def sample(self, rng: random.Random) -> float:
        if self.name == "uniform":
            low, high = self.params
            return rng.uniform(low, high)
        if self.name == "normal":
            mean, std = self.params
            return rng.gauss(mean, std)
        if self.name == "randint":
            low, high = self.params
            return float(rng.randint(int(low), int(high)))
        if self.name == "constant":
            return float(self.params[0])
        raise InvalidInputError(f"unknown distribution {self.name!r}")


@dataclass(frozen=True)
class AugmentConfig:
    """Hyperparameters of one augmentation scheme.

    ``d`` is the number of added dimensions for IRNI and RNI (CLIP and RP
    derive their width from the graph). ``refinement`` and ``selector``
    steer IRNI's walks; CLIP always refines once with color refinement and
    RP always walks obliviously, regardless of these fields.
    """

    method: Method
    d: int = 1
    refinement: RefinementKind = RefinementKind.CREF
    selector: SelectorKind = SelectorKind.FIRST_LARGEST
    rni_distribution: RniDistribution = field(default_factory=RniDistribution)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.d < 0:
            raise InvalidInputError(f"added dimension count must be >= 0, got {self.d}")


@dataclass(frozen=True)
class AugmentationSample:
    """One augmentation draw: a feature block plus how it was produced.

    ``features`` has one row per vertex, all of width ``width``. ``walk``
    records the filled walk prefix (IRNI, RP) or the per-vertex cell indices
    (CLIP); it is empty for RNI.
    """

    method: Method
    features: tuple[tuple[float, ...], ...]
    walk: tuple[int, ...]
    seed: int

    @property
    def width(self) -> int:
        return len(self.features[0]) if self.features else 0


def _indicator_block(n: int, prefix: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * len(prefix) for _ in range(n)]
    for j, v in enumerate(prefix):
        rows[v - 1][j] = 1
    return tuple(tuple(r) for r in rows)


def irni_features(
    g: Graph, pi: Coloring, cfg: AugmentConfig, sample_index: int = 1
) -> AugmentationSample:
    """Indicator columns for the first d individualized vertices of one walk."""
    if cfg.method is not Method.IRNI:
        raise InvalidInputError(f"config method is {cfg.method}, expected IRNI")
    if cfg.d < 1:
        raise InvalidInputError("IRNI needs at least one added dimension")
    if cfg.d > g.n:
        raise InvalidInputError(f"d={cfg.d} exceeds vertex count {g.n}")
    walk = random_walk(
        g,
        pi,
        refinement=cfg.refinement,
        selector=cfg.selector,
        d=cfg.d,
        rng_seed=cfg.seed,
        sample_index=sample_index,
    )
    return AugmentationSample(
        method=Method.IRNI,
        features=_indicator_block(g.n, walk.filled_prefix),
        walk=walk.filled_prefix,
        seed=cfg.seed,
    )


def rni_features(g: Graph, cfg: AugmentConfig, sample_index: int = 1) -> AugmentationSample:
    """n*d independent draws from the configured distribution; structure-free."""
    if cfg.method is not Method.RNI:
        raise InvalidInputError(f"config method is {cfg.method}, expected RNI")
    if cfg.d < 1:
        raise InvalidInputError("RNI needs at least one added dimension")
    rng = random.Random(derive_key(cfg.seed, sample_index))
    dist = cfg.rni_distribution
    features = tuple(
        tuple(dist.sample(rng) for _ in range(cfg.d)) for _ in range(g.n)
    )
    return AugmentationSample(Method.RNI, features, (), cfg.seed)


def rp_features(g: Graph, seed: int, sample_index: int = 1) -> AugmentationSample:
    """One-hot encoding of a uniformly random permutation, via an oblivious walk."""
    walk = random_walk(
        g,
        Coloring.uniform(g.n),
        refinement=RefinementKind.OREF,
        selector=SelectorKind.FIRST_LARGEST,
        d=g.n,
        rng_seed=seed,
        sample_index=sample_index,
    )
    return AugmentationSample(
        method=Method.RP,
        features=_indicator_block(g.n, walk.filled_prefix),
        walk=walk.filled_prefix,
        seed=seed,
    )


def clip_features(
    g: Graph,
    pi: Coloring,
    seed: int,
    sample_index: int = 1,
    width: int | None = None,
) -> AugmentationSample:
    """Uniform bijection to {0..|C|-1} inside each refined cell, one-hot encoded.

    The one-hot width defaults to the largest cell size after color
    refinement; pass ``width`` to pad to a dataset-wide constant.
    """
    refined = color_refine(g, pi, ())
    cells = refined.cells()
    max_cell = max(len(c) for c in cells)
    if width is None:
        width = max_cell
    elif width < max_cell:
        raise InvalidInputError(
            f"one-hot width {width} is below the largest cell size {max_cell}"
        )
    rng = random.Random(derive_key(seed, sample_index))
    index_of = [0] * g.n
    for cell in cells:
        assigned = list(range(len(cell)))
        rng.shuffle(assigned)
        for v, idx in zip(cell, assigned):
            index_of[v - 1] = idx
    features = tuple(
        tuple(1 if j == index_of[v] else 0 for j in range(width)) for v in range(g.n)
    )
    return AugmentationSample(Method.CLIP, features, tuple(index_of), seed)


def augmentation_sample(
    g: Graph, pi: Coloring, cfg: AugmentConfig, sample_index: int = 1
) -> AugmentationSample:
    """Dispatch one draw of cfg.method."""
    if cfg.method is Method.IRNI:
        return irni_features(g, pi, cfg, sample_index)
    if cfg.method is Method.RNI:
        return rni_features(g, cfg, sample_index)
    if cfg.method is Method.RP:
        return rp_features(g, cfg.seed, sample_index)
    if cfg.method is Method.CLIP:
        return clip_features(g, pi, cfg.seed, sample_index)
    raise InvalidInputError(f"unknown method {cfg.method!r}")


def eor_samples(
    g: Graph, pi: Coloring, cfg: AugmentConfig, e: int
) -> list[AugmentationSample]:
    """e independent samples under seeds derived from (cfg.seed, 1..e).

    Sample i depends only on (cfg.seed, i), so the list is deterministic and
    samples could be generated in parallel without changing the result.
    Averaging the downstream predictions is the consumer's job.
    """
    if e < 1:
        raise InvalidInputError(f"sample count must be >= 1, got {e}")
    return [augmentation_sample(g, pi, cfg, sample_index=i) for i in range(1, e + 1)]
