import random

import pytest
from hypothesis import given, settings, strategies as st

from iraug import (
    Coloring,
    Graph,
    InvalidInputError,
    RefinementKind,
    color_refine,
    cr_then_trivial_refine,
    gen_complete,
    gen_cycle,
    is_equitable,
    is_finer,
    oblivious_refine,
    refine,
    trivial_refine,
)

from _oracles import naive_equitable_partition, random_permutation, random_simple_graph
from test_graphs import figure_eight_graph

P3 = Graph(3, [(1, 2), (2, 3)])


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if draw(st.booleans())
    ]
    colors = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    nu_len = draw(st.integers(min_value=0, max_value=min(3, n)))
    nu = tuple(draw(st.permutations(range(1, n + 1)))[:nu_len])
    return Graph(n, edges, colors), Coloring.from_values(colors), nu


class TestColorRefine:
    def test_k3_uniform_stays_single_cell(self):
        out = color_refine(gen_complete(3), Coloring.uniform(3))
        assert out.k == 1

    def test_p3_splits_ends_from_middle(self):
        out = color_refine(P3, Coloring.uniform(3))
        assert out.partition() == frozenset({frozenset({1, 3}), frozenset({2})})

    def test_figure_eight_apex_separates(self):
        g = figure_eight_graph()
        out = color_refine(g, Coloring.uniform(8))
        assert out.partition() == frozenset({frozenset({8}), frozenset(range(1, 8))})

    def test_c6_individualized_by_distance(self):
        out = color_refine(gen_cycle(6), Coloring.uniform(6), (1,))
        assert out.partition() == frozenset(
            {frozenset({1}), frozenset({2, 6}), frozenset({3, 5}), frozenset({4})}
        )

    def test_duplicate_individualization_rejected(self):
        with pytest.raises(InvalidInputError):
            color_refine(gen_cycle(4), Coloring.uniform(4), (2, 2))

    def test_out_of_range_individualization_rejected(self):
        with pytest.raises(InvalidInputError):
            color_refine(gen_cycle(4), Coloring.uniform(4), (5,))

    def test_coloring_size_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            color_refine(gen_cycle(4), Coloring.uniform(5))


class TestTrivialRefine:
    def test_empty_sequence_is_identity(self):
        pi = Coloring((1, 2, 1, 2))
        out = trivial_refine(gen_cycle(4), pi, ())
        assert out.partition() == pi.partition()

    def test_k3_individualize_one(self):
        out = trivial_refine(gen_complete(3), Coloring.uniform(3), (2,))
        assert out.partition() == frozenset({frozenset({2}), frozenset({1, 3})})

    def test_p3_with_refined_start(self):
        pi = Coloring((1, 2, 1))
        out = trivial_refine(P3, pi, (1,))
        assert out.is_discrete

    def test_no_further_refinement_happens(self):
        # P4 uniform with one individualization: color refinement would split
        # more, trivial refinement must not
        g = Graph(4, [(1, 2), (2, 3), (3, 4)])
        out = trivial_refine(g, Coloring.uniform(4), (1,))
        assert out.partition() == frozenset({frozenset({1}), frozenset({2, 3, 4})})


class TestObliviousRefine:
    def test_discards_input_coloring(self):
        out = oblivious_refine(gen_complete(3), Coloring((1, 2, 3)), ())
        assert out.k == 1

    def test_artificial_colors_ordered_by_position(self):
        g = gen_cycle(4)
        out = oblivious_refine(g, Coloring.uniform(4), (3, 1))
        assert out.color_of(2) == out.color_of(4) == 1
        assert out.color_of(3) == 2  # first individualized
        assert out.color_of(1) == 3  # second individualized

    def test_full_sequence_is_discrete(self):
        out = oblivious_refine(gen_cycle(4), Coloring.uniform(4), (2, 4, 1, 3))
        assert out.is_discrete


class TestCrThenTrivial:
    def test_empty_sequence_equals_color_refine(self):
        a = cr_then_trivial_refine(P3, Coloring.uniform(3), ())
        b = color_refine(P3, Coloring.uniform(3), ())
        assert a.partition() == b.partition()

    def test_cr_then_split(self):
        out = cr_then_trivial_refine(P3, Coloring.uniform(3), (1,))
        assert out.is_discrete

    def test_discrete_input_stays_discrete(self):
        pi = Coloring((3, 1, 2))
        out = cr_then_trivial_refine(P3, pi, (2,))
        assert out.is_discrete

    def test_no_re_refinement_after_individualization(self):
        # on C6, CR alone keeps one cell; individualizing afterwards must not
        # trigger the distance split that color_refine would produce
        g = gen_cycle(6)
        out = cr_then_trivial_refine(g, Coloring.uniform(6), (1,))
        assert out.partition() == frozenset({frozenset({1}), frozenset({2, 3, 4, 5, 6})})


class TestPredicates:
    def test_equitable_examples(self):
        assert is_equitable(gen_complete(3), Coloring.uniform(3))
        assert not is_equitable(P3, Coloring.uniform(3))
        assert is_equitable(P3, Coloring((1, 2, 3)))

    def test_finer_examples(self):
        discrete = Coloring((1, 2, 3))
        uniform = Coloring.uniform(3)
        assert is_finer(discrete, uniform)
        assert is_finer(uniform, uniform)
        assert not is_finer(Coloring((1, 1, 2)), Coloring((1, 2, 2)))
        assert not is_finer(uniform, discrete)


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(colored_graphs())
    def test_cr_output_equitable_finer_with_singletons(self, case):
        g, pi, nu = case
        out = color_refine(g, pi, nu)
        assert is_equitable(g, out)
        assert is_finer(out, pi)
        for v in nu:
            assert out.cell(out.color_of(v)) == (v,)

    @settings(max_examples=40, deadline=None)
    @given(colored_graphs())
    def test_cr_idempotent_on_partition(self, case):
        g, pi, nu = case
        once = color_refine(g, pi, nu)
        twice = color_refine(g, once, nu)
        assert once.partition() == twice.partition()

    @settings(max_examples=60, deadline=None)
    @given(colored_graphs())
    def test_cr_matches_naive_oracle(self, case):
        g, pi, nu = case
        got = color_refine(g, pi, nu).partition()
        want = naive_equitable_partition(g.n, g.edges, pi.colors, nu)
        assert got == want

    @settings(max_examples=40, deadline=None)
    @given(colored_graphs(), st.randoms(use_true_random=False))
    def test_names_are_isomorphism_invariant(self, case, rng):
        g, pi, nu = case
        sigma = random_permutation(rng, g.n)
        h = g.permuted(sigma)
        rho = pi.permuted(sigma)
        nu_mapped = tuple(sigma[v - 1] for v in nu)
        for kind in RefinementKind:
            ref_g = refine(kind, g, pi, nu)
            ref_h = refine(kind, h, rho, nu_mapped)
            for v in range(1, g.n + 1):
                assert ref_h.color_of(sigma[v - 1]) == ref_g.color_of(v)

    @settings(max_examples=40, deadline=None)
    @given(colored_graphs())
    def test_refinement_contract_individualizes(self, case):
        g, pi, nu = case
        for kind in RefinementKind:
            out = refine(kind, g, pi, nu)
            for v in nu:
                assert out.cell(out.color_of(v)) == (v,)

    def test_fixed_corpus_matches_oracle(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(1, 12)
            edges = random_simple_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            colors = [rng.randint(1, 3) for _ in range(n)]
            g = Graph(n, edges, colors)
            pi = Coloring.from_values(colors)
            nu = tuple(random_permutation(rng, n)[: rng.randint(0, min(3, n))])
            got = color_refine(g, pi, nu).partition()
            want = naive_equitable_partition(n, edges, pi.colors, nu)
            assert got == want
