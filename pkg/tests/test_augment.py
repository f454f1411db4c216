import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from iraug import (
    AugmentConfig,
    Coloring,
    Graph,
    InvalidInputError,
    Method,
    RefinementKind,
    RniDistribution,
    SelectorKind,
    augmentation_sample,
    clip_features,
    color_refine,
    enumerate_tree,
    eor_samples,
    gen_complete,
    gen_cycle,
    irni_features,
    rni_features,
    rp_features,
)
from iraug.tree import _fill_prefix

from _oracles import random_permutation, random_simple_graph


def one_hot_columns(features, width):
    return [
        sum(row[j] for row in features) == 1 and all(row[j] in (0, 1) for row in features)
        for j in range(width)
    ]


def extended_partition(g, pi, rows):
    """Partition after refining on (base color, appended row) pairs."""
    combined = Coloring.from_values(list(zip(pi.colors, (tuple(r) for r in rows))))
    return color_refine(g, combined).partition()


class TestIrni:
    def test_single_vertex(self):
        g = Graph(1, [])
        cfg = AugmentConfig(method=Method.IRNI, d=1, seed=0)
        sample = irni_features(g, Coloring.uniform(1), cfg)
        assert sample.features == ((1,),)

    def test_c6_columns_are_one_hot(self):
        g = gen_cycle(6)
        for seed in range(10):
            cfg = AugmentConfig(method=Method.IRNI, d=2, seed=seed)
            sample = irni_features(g, Coloring.uniform(6), cfg)
            assert all(one_hot_columns(sample.features, 2))

    def test_full_depth_is_permutation_matrix(self):
        g = gen_cycle(5)
        cfg = AugmentConfig(method=Method.IRNI, d=5, seed=3)
        sample = irni_features(g, Coloring.uniform(5), cfg)
        assert sorted(sample.walk) == [1, 2, 3, 4, 5]
        assert all(one_hot_columns(sample.features, 5))
        assert all(sum(row) == 1 for row in sample.features)

    def test_d_over_n_rejected(self):
        cfg = AugmentConfig(method=Method.IRNI, d=7, seed=0)
        with pytest.raises(InvalidInputError):
            irni_features(gen_cycle(6), Coloring.uniform(6), cfg)

    def test_d_zero_rejected(self):
        cfg = AugmentConfig(method=Method.IRNI, d=0, seed=0)
        with pytest.raises(InvalidInputError):
            irni_features(gen_cycle(6), Coloring.uniform(6), cfg)

    def test_method_mismatch_rejected(self):
        cfg = AugmentConfig(method=Method.RNI, d=1, seed=0)
        with pytest.raises(InvalidInputError):
            irni_features(gen_cycle(6), Coloring.uniform(6), cfg)

    def test_prefix_vertices_have_distinct_nonzero_rows(self):
        g = gen_cycle(8)
        cfg = AugmentConfig(method=Method.IRNI, d=3, seed=5)
        sample = irni_features(g, Coloring.uniform(8), cfg)
        prefix_rows = [sample.features[v - 1] for v in sample.walk]
        assert len(set(prefix_rows)) == len(prefix_rows)
        zero = (0,) * 3
        assert all(row != zero for row in prefix_rows)
        for v in range(1, 9):
            if v not in sample.walk:
                assert sample.features[v - 1] == zero


class TestRni:
    def test_reproducible_draws(self):
        g = gen_cycle(3)
        cfg = AugmentConfig(method=Method.RNI, d=2, seed=9)
        a = rni_features(g, cfg)
        b = rni_features(g, cfg)
        assert a == b
        assert len(a.features) == 3 and all(len(r) == 2 for r in a.features)

    def test_constant_distribution(self):
        g = gen_cycle(3)
        cfg = AugmentConfig(
            method=Method.RNI, d=2, seed=1, rni_distribution=RniDistribution("constant", (0.0,))
        )
        sample = rni_features(g, cfg)
        assert all(row == (0.0, 0.0) for row in sample.features)

    def test_seeds_give_different_samples(self):
        g = gen_cycle(3)
        a = rni_features(g, AugmentConfig(method=Method.RNI, d=2, seed=1))
        b = rni_features(g, AugmentConfig(method=Method.RNI, d=2, seed=2))
        assert a.features != b.features

    def test_named_distributions(self):
        g = gen_cycle(4)
        for dist in (
            RniDistribution("uniform", (0.0, 1.0)),
            RniDistribution("normal", (0.0, 1.0)),
            RniDistribution("randint", (0, 3)),
        ):
            cfg = AugmentConfig(method=Method.RNI, d=3, seed=4, rni_distribution=dist)
            sample = rni_features(g, cfg)
            assert len(sample.features) == 4
        if dist.name == "randint":
            assert all(v == int(v) for row in sample.features for v in row)

    def test_unknown_distribution_rejected(self):
        g = gen_cycle(3)
        cfg = AugmentConfig(
            method=Method.RNI, d=1, seed=0, rni_distribution=RniDistribution("cauchy", (0.0,))
        )
        with pytest.raises(InvalidInputError):
            rni_features(g, cfg)


class TestRp:
    def test_single_vertex(self):
        sample = rp_features(Graph(1, []), seed=0)
        assert sample.features == ((1,),)

    def test_rows_and_columns_sum_to_one(self):
        g = gen_cycle(4)
        for seed in range(10):
            sample = rp_features(g, seed)
            assert all(sum(row) == 1 for row in sample.features)
            assert all(one_hot_columns(sample.features, 4))

    def test_n3_frequencies_close_to_uniform(self):
        g = gen_complete(3)
        counts = Counter(rp_features(g, seed).walk for seed in range(6000))
        assert len(counts) == 6
        for perm, count in counts.items():
            assert abs(count / 6000 - 1 / 6) < 0.05, (perm, count)

    def test_exact_uniformity_via_enumeration(self):
        g = gen_cycle(4)
        dist = {}
        for node in enumerate_tree(
            g,
            Coloring.uniform(4),
            RefinementKind.OREF,
            SelectorKind.FIRST_LARGEST,
            depth_bound=4,
        ):
            prefix = _fill_prefix(node.nu, node.coloring, 4)
            dist[prefix] = dist.get(prefix, Fraction(0)) + node.probability
        assert len(dist) == 24
        assert all(p == Fraction(1, 24) for p in dist.values())


class TestClip:
    def test_discrete_refinement_gives_width_one(self):
        g = Graph(3, [(1, 2), (2, 3)])
        pi = Coloring((1, 2, 3))
        sample = clip_features(g, pi, seed=0)
        assert sample.features == ((1,), (1,), (1,))

    def test_two_cell_assignment_uniform_over_orders(self):
        # path with cells {2} and {1, 3}
        g = Graph(3, [(1, 2), (2, 3)])
        pi = Coloring.uniform(3)
        seen = Counter()
        for seed in range(2000):
            sample = clip_features(g, pi, seed)
            seen[sample.walk] += 1
        assert len(seen) == 2  # two ways to order the {1, 3} cell
        for count in seen.values():
            assert abs(count / 2000 - 0.5) < 0.05

    def test_k3_uniform_permutation_of_indices(self):
        g = gen_complete(3)
        seen = Counter()
        for seed in range(3000):
            sample = clip_features(g, Coloring.uniform(3), seed)
            seen[sample.walk] += 1
        assert len(seen) == 6
        for count in seen.values():
            assert abs(count / 3000 - 1 / 6) < 0.05

    def test_rows_are_one_hot_of_width_max_cell(self):
        g = gen_cycle(6)
        sample = clip_features(g, Coloring.uniform(6), seed=1)
        assert all(sum(row) == 1 for row in sample.features)
        assert sample.width == 6  # uniform equitable cycle keeps one cell

    def test_width_override_pads(self):
        g = gen_complete(3)
        sample = clip_features(g, Coloring.uniform(3), seed=1, width=5)
        assert sample.width == 5
        assert all(sum(row) == 1 for row in sample.features)

    def test_width_below_max_cell_rejected(self):
        g = gen_complete(3)
        with pytest.raises(InvalidInputError):
            clip_features(g, Coloring.uniform(3), seed=1, width=2)


class TestEor:
    def test_single_sample_equals_base(self):
        g = gen_cycle(6)
        pi = Coloring.uniform(6)
        for method in Method:
            cfg = AugmentConfig(method=method, d=2, seed=7)
            assert eor_samples(g, pi, cfg, 1) == [augmentation_sample(g, pi, cfg)]

    def test_runs_are_identical(self):
        g = gen_cycle(6)
        pi = Coloring.uniform(6)
        cfg = AugmentConfig(method=Method.IRNI, d=2, seed=3)
        assert eor_samples(g, pi, cfg, 5) == eor_samples(g, pi, cfg, 5)

    def test_invalid_count_rejected(self):
        cfg = AugmentConfig(method=Method.RP, seed=0)
        with pytest.raises(InvalidInputError):
            eor_samples(gen_cycle(3), Coloring.uniform(3), cfg, 0)

    def test_parallel_generation_equals_sequential(self):
        from concurrent.futures import ThreadPoolExecutor

        g = gen_cycle(8)
        pi = Coloring.uniform(8)
        cfg = AugmentConfig(method=Method.IRNI, d=3, seed=13)
        sequential = eor_samples(g, pi, cfg, 8)
        with ThreadPoolExecutor(max_workers=4) as pool:
            parallel = list(
                pool.map(lambda i: augmentation_sample(g, pi, cfg, i), range(1, 9))
            )
        assert parallel == sequential

    def test_c6_pair_collision_rate_matches_enumeration(self):
        # two independent walks coincide with probability 1/12 on the cycle
        # (12 equiprobable leaves, confirmed by enumerate_tree)
        g = gen_cycle(6)
        pi = Coloring.uniform(6)
        trials = 1800
        same = 0
        for seed in range(trials):
            cfg = AugmentConfig(method=Method.IRNI, d=2, seed=seed)
            a, b = eor_samples(g, pi, cfg, 2)
            same += a.walk == b.walk
        p = Fraction(1, 12)
        sigma = (float(p) * (1 - float(p)) / trials) ** 0.5
        assert abs(same / trials - float(p)) < 3 * sigma


class TestIndicatorInvariants:
    def test_random_samples_respect_row_and_column_sums(self):
        rng = random.Random(77)
        for _ in range(120):
            n = rng.randint(2, 8)
            g = Graph(n, random_simple_graph(rng, n, 0.5))
            pi = Coloring.uniform(n)
            method = rng.choice([Method.IRNI, Method.RP, Method.CLIP])
            d = rng.randint(1, n)
            cfg = AugmentConfig(method=method, d=d, seed=rng.randint(0, 10**6))
            sample = augmentation_sample(g, pi, cfg)
            for row in sample.features:
                assert all(x in (0, 1) for x in row)
            if method is Method.IRNI:
                assert all(sum(row) <= 1 for row in sample.features)
                assert all(one_hot_columns(sample.features, sample.width))
            else:
                assert all(sum(row) == 1 for row in sample.features)
            if method is Method.RP:
                assert all(one_hot_columns(sample.features, sample.width))


class TestDistributionalInvariance:
    def _irni_partition_distribution(self, g, pi, d):
        dist = {}
        for node in enumerate_tree(g, pi, depth_bound=d):
            prefix = _fill_prefix(node.nu, node.coloring, d)
            rows = [[0] * d for _ in range(g.n)]
            for j, v in enumerate(prefix):
                rows[v - 1][j] = 1
            part = extended_partition(g, pi, rows)
            dist[part] = dist.get(part, Fraction(0)) + node.probability
        return dist

    def test_irni_partition_distribution_invariant(self):
        rng = random.Random(41)
        for _ in range(8):
            n = rng.randint(2, 6)
            g = Graph(n, random_simple_graph(rng, n, 0.5))
            sigma = random_permutation(rng, n)
            h = g.permuted(sigma)
            d = rng.randint(1, n)
            dist_g = self._irni_partition_distribution(g, Coloring.uniform(n), d)
            dist_h = self._irni_partition_distribution(h, Coloring.uniform(n), d)
            mapped = {
                frozenset(frozenset(sigma[v - 1] for v in cell) for cell in part): p
                for part, p in dist_g.items()
            }
            assert mapped == dist_h

    def test_rp_partition_distribution_invariant(self):
        rng = random.Random(47)
        for _ in range(5):
            n = rng.randint(2, 4)
            g = Graph(n, random_simple_graph(rng, n, 0.5))
            sigma = random_permutation(rng, n)
            h = g.permuted(sigma)

            def rp_dist(graph):
                pi = Coloring.uniform(graph.n)
                dist = {}
                for node in enumerate_tree(
                    graph,
                    pi,
                    RefinementKind.OREF,
                    SelectorKind.FIRST_LARGEST,
                    depth_bound=graph.n,
                ):
                    prefix = _fill_prefix(node.nu, node.coloring, graph.n)
                    rows = [[0] * graph.n for _ in range(graph.n)]
                    for j, v in enumerate(prefix):
                        rows[v - 1][j] = 1
                    part = extended_partition(graph, pi, rows)
                    dist[part] = dist.get(part, Fraction(0)) + node.probability
                return dist

            dist_g = rp_dist(g)
            dist_h = rp_dist(h)
            mapped = {
                frozenset(frozenset(sigma[v - 1] for v in cell) for cell in part): p
                for part, p in dist_g.items()
            }
            assert mapped == dist_h

    def test_clip_partition_distribution_invariant(self):
        rng = random.Random(43)
        for _ in range(6):
            n = rng.randint(2, 5)
            g = Graph(n, random_simple_graph(rng, n, 0.5))
            sigma = random_permutation(rng, n)
            h = g.permuted(sigma)

            def clip_dist(graph):
                pi = Coloring.uniform(graph.n)
                cells = color_refine(graph, pi).cells()
                width = max(len(c) for c in cells)
                total = Fraction(1)
                for c in cells:
                    for i in range(2, len(c) + 1):
                        total /= i
                dist = {}
                for combo in itertools.product(
                    *(itertools.permutations(range(len(c))) for c in cells)
                ):
                    rows = [[0] * width for _ in range(graph.n)]
                    for cell, perm in zip(cells, combo):
                        for v, idx in zip(cell, perm):
                            rows[v - 1][idx] = 1
                    part = extended_partition(graph, pi, rows)
                    dist[part] = dist.get(part, Fraction(0)) + total
                return dist

            dist_g = clip_dist(g)
            dist_h = clip_dist(h)
            mapped = {
                frozenset(frozenset(sigma[v - 1] for v in cell) for cell in part): p
                for part, p in dist_g.items()
            }
            assert mapped == dist_h
