"""The four augmentation encoders and ensembling over randomness."""

from iraug import (
    AugmentConfig,
    Coloring,
    Method,
    RniDistribution,
    clip_features,
    eor_samples,
    gen_cycle,
    irni_features,
    rni_features,
    rp_features,
)

g = gen_cycle(6)
pi = Coloring.uniform(6)


def show(label, sample):
    print(f"\n{label} (walk/assignment {sample.walk})")
    for v, row in enumerate(sample.features, start=1):
        print(f"  v{v}: {row}")


# Walk-based indicators: column j marks the j-th individualized vertex.
cfg = AugmentConfig(method=Method.IRNI, d=2, seed=42)
show("2 walk-indicator columns", irni_features(g, pi, cfg))

# Structure-free noise: every vertex gets d draws from a chosen distribution.
cfg = AugmentConfig(
    method=Method.RNI, d=2, seed=42, rni_distribution=RniDistribution("uniform", (0.0, 1.0))
)
sample = rni_features(g, cfg)
print("\nnoise rows (first two):", sample.features[0], sample.features[1])

# A uniformly random permutation, one-hot per vertex.
show("permutation one-hots", rp_features(g, seed=42))

# Per-cell random indices after one refinement pass. On the cycle there is
# a single cell, so this is a permutation as well.
show("cell-index one-hots", clip_features(g, pi, seed=42))

# Ensembling over randomness: e independent draws under derived seeds.
cfg = AugmentConfig(method=Method.IRNI, d=2, seed=42)
batch = eor_samples(g, pi, cfg, e=4)
print("\n4 ensemble walks:", [s.walk for s in batch])
print("rerunning gives the same walks:", [s.walk for s in eor_samples(g, pi, cfg, e=4)])
