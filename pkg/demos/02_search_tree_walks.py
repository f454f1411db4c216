"""Search trees: cell selection, random walks, leaves, and certificates."""

from fractions import Fraction

from iraug import (
    Coloring,
    RefinementKind,
    SelectorKind,
    children,
    enumerate_tree,
    gen_cycle,
    gen_platonic,
    isomorphic,
    random_walk,
)

c6 = gen_cycle(6)
uniform = Coloring.uniform(6)

# The root has one big cell, so six children; each walk individualizes two
# vertices before the coloring becomes discrete.
print("children at the root:", len(children(c6, uniform, ())))
walk = random_walk(c6, uniform, d=6, rng_seed=7)
print("walk:", walk.nu, "filled prefix:", walk.filled_prefix)
print("leaf coloring discrete?", walk.leaf_coloring.is_discrete)

# Same seed, smaller depth bound: the shorter walk is a prefix of the longer.
short = random_walk(c6, uniform, d=1, rng_seed=7)
print("depth-1 walk is a prefix:", short.nu == walk.nu[:1])

# Exhaustive enumeration gives every leaf with its exact probability.
leaves = list(enumerate_tree(c6, uniform))
print("\nleaves:", len(leaves), "- total probability", sum(l.probability for l in leaves))
assert all(l.probability == Fraction(1, 12) for l in leaves)

# The minimum leaf certificate is a canonical form, which yields an exact
# isomorphism test for small graphs.
shuffled = c6.permuted((4, 1, 6, 3, 2, 5))
print("C6 isomorphic to its relabeling:", isomorphic(c6, shuffled))

# On 3-connected planar graphs, a degree-aware selector pins everything
# down within four individualizations.
ico = gen_platonic("icosahedron")
depths = {
    len(node.nu)
    for node in enumerate_tree(
        ico, Coloring.uniform(12), RefinementKind.CREF, SelectorKind.PLANAR_MIN_DEGREE
    )
}
print("icosahedron leaf depths under the planar selector:", sorted(depths))
