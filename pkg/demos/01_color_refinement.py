"""Color refinement basics: equitable colorings and individualization."""

from iraug import (
    Coloring,
    Graph,
    RefinementKind,
    color_refine,
    gen_cycle,
    is_equitable,
    is_finer,
    refine,
)

# A path on three vertices: the middle vertex sees two neighbors of its own
# color, the ends see one, so the uniform coloring is not equitable.
p3 = Graph(3, [(1, 2), (2, 3)])
uniform = Coloring.uniform(3)
print("P3 uniform equitable?", is_equitable(p3, uniform))

refined = color_refine(p3, uniform)
print("P3 refined cells:", refined.cells())
print("refined is equitable:", is_equitable(p3, refined))
print("refined is finer than uniform:", is_finer(refined, uniform))

# The 6-cycle is vertex-transitive: refinement alone learns nothing.
c6 = gen_cycle(6)
print("\nC6 refined:", color_refine(c6, Coloring.uniform(6)).cells())

# Individualizing vertex 1 breaks the symmetry; refinement then sorts the
# rest by distance from it. The individualized vertex gets the top color.
pinned = color_refine(c6, Coloring.uniform(6), nu=(1,))
print("C6 with vertex 1 individualized:", pinned.cells())

# The other refinement flavors do less work on purpose: trivial refinement
# only moves the individualized vertices, the oblivious one also forgets
# the input colors, and the combined one refines once before pinning.
for kind in RefinementKind:
    out = refine(kind, c6, Coloring.uniform(6), (1,))
    print(f"{kind.value:>5}:", out.cells())
