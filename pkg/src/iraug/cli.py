"""Batch command-line front end.

Subcommands: refine, walk, augment, distinguish, gen, iso. All output is
deterministic: the same argv and input files produce byte-identical output.
Exit codes: 0 success, 1 usage error, 2 input validation error, 3 node
budget exceeded. The default seed is DEFAULT_SEED and can be overridden
with the IRAUG_SEED environment variable or the --seed flag.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .augment import AugmentConfig, Method, RniDistribution, eor_samples
from .datasets import (
    gen_circulant,
    gen_complete,
    gen_csl,
    gen_cycle,
    gen_gnp,
    gen_platonic,
    gen_random_regular,
    read_graph,
    write_graph,
)
from .distinguish import distinguish_probability, exact_distinguish
from .errors import BudgetExceededError, InvalidInputError
from .graphs import base_coloring
from .refinement import RefinementKind, refine
from .rng import derive_key
from .tree import DEFAULT_NODE_BUDGET, SelectorKind, isomorphic, random_walk

DEFAULT_SEED = 1729
SEED_ENV_VAR = "IRAUG_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _refinement(value: str) -> RefinementKind:
    try:
        return RefinementKind(value)
    except ValueError:
        raise InvalidInputError(f"unknown refinement {value!r}") from None


def _selector(value: str) -> SelectorKind:
    try:
        return SelectorKind(value)
    except ValueError:
        raise InvalidInputError(f"unknown selector {value!r}") from None


def _vertex_list(value: str) -> tuple[int, ...]:
    if not value:
        return ()
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise InvalidInputError(f"expected comma-separated vertices, got {value!r}") from None


def _rni_dist(value: str) -> RniDistribution:
    name, _, raw = value.partition(":")
    try:
        params = tuple(float(p) for p in raw.split(",")) if raw else ()
    except ValueError:
        raise InvalidInputError(f"malformed distribution parameters in {value!r}") from None
    defaults = {"uniform": (0.0, 1.0), "normal": (0.0, 1.0), "randint": (0.0, 1.0), "constant": (0.0,)}
    if name not in defaults:
        raise InvalidInputError(f"unknown distribution {name!r}")
    return RniDistribution(name, params or defaults[name])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iraug", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="print the refined coloring, one 'vertex color' line each")
    p.add_argument("--in", dest="path", required=True)
    p.add_argument("--individualize", default="", metavar="V1,V2,...")
    p.add_argument("--refinement", default="cref", choices=[k.value for k in RefinementKind])

    p = sub.add_parser("walk", help="run one random walk and print it as JSON")
    p.add_argument("--in", dest="path", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--refinement", default="cref", choices=[k.value for k in RefinementKind])
    p.add_argument("--selector", default="first-largest", choices=[k.value for k in SelectorKind])

    p = sub.add_parser("augment", help="draw augmentation samples and emit the JSON document")
    p.add_argument("--in", dest="path", required=True)
    p.add_argument("--method", required=True, choices=[m.value for m in Method])
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--refinement", default="cref", choices=[k.value for k in RefinementKind])
    p.add_argument("--selector", default="first-largest", choices=[k.value for k in SelectorKind])
    p.add_argument("--rni-dist", default="uniform:0,1", metavar="NAME:P1,P2")
    p.add_argument("--clip-width", type=int, default=None,
                   help="pad CLIP one-hots to a dataset-wide width")

    p = sub.add_parser("distinguish", help="estimate or compute the separation probability")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", required=True, choices=[m.value for m in Method])
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--refinement", default="cref", choices=[k.value for k in RefinementKind])
    p.add_argument("--selector", default="first-largest", choices=[k.value for k in SelectorKind])
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("gen", help="generate graph files under OUT/<family>/<params>/")
    p.add_argument("--family", required=True,
                   choices=["csl", "circulant", "cycle", "complete", "gnp",
                            "random-regular", "platonic"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--skip", type=int, default=None)
    p.add_argument("--skips", default=None, metavar="S1,S2,...")
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--name", default=None, help="platonic solid name")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("iso", help="decide isomorphism of two small graphs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    return parser


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def _cmd_refine(args) -> int:
    g = read_graph(args.path)
    result = refine(
        _refinement(args.refinement), g, base_coloring(g), _vertex_list(args.individualize)
    )
    for v in range(1, g.n + 1):
        print(f"{v} {result.color_of(v)}")
    return 0


def _cmd_walk(args) -> int:
    g = read_graph(args.path)
    seed = args.seed if args.seed is not None else _default_seed()
    result = random_walk(
        g,
        base_coloring(g),
        refinement=_refinement(args.refinement),
        selector=_selector(args.selector),
        d=args.d,
        rng_seed=seed,
    )
    print(_json({
        "walk": list(result.nu),
        "natural_length": result.natural_length,
        "filled_prefix": list(result.filled_prefix),
        "leaf_coloring": list(result.leaf_coloring.colors),
        "d": args.d,
        "seed": seed,
    }))
    return 0


def _cmd_augment(args) -> int:
    g = read_graph(args.path)
    seed = args.seed if args.seed is not None else _default_seed()
    method = Method(args.method)
    cfg = AugmentConfig(
        method=method,
        d=args.d,
        refinement=_refinement(args.refinement),
        selector=_selector(args.selector),
        rni_distribution=_rni_dist(args.rni_dist),
        seed=seed,
    )
    if method is Method.CLIP and args.clip_width is not None:
        from .augment import clip_features

        samples = [
            clip_features(g, base_coloring(g), seed, sample_index=i, width=args.clip_width)
            for i in range(1, args.samples + 1)
        ]
    else:
        samples = eor_samples(g, base_coloring(g), cfg, args.samples)
    doc = _json({
        "n": g.n,
        "method": method.value,
        "d": samples[0].width,
        "seed": seed,
        "samples": [
            {"walk": list(s.walk), "features": [list(row) for row in s.features]}
            for s in samples
        ],
    })
    if args.out:
        Path(args.out).write_text(doc + "\n", encoding="ascii")
    else:
        print(doc)
    return 0


def _cmd_distinguish(args) -> int:
    g1 = read_graph(args.a)
    g2 = read_graph(args.b)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = AugmentConfig(
        method=Method(args.method),
        d=args.d,
        refinement=_refinement(args.refinement),
        selector=_selector(args.selector),
        seed=seed,
    )
    if args.exact:
        value = float(exact_distinguish(g1, g2, cfg, node_budget=args.budget))
    else:
        value = distinguish_probability(g1, g2, cfg, args.trials)
    print(repr(value))
    return 0


def _cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    family = args.family

    def need(flag, value):
        if value is None:
            raise InvalidInputError(f"--{flag} is required for family {family!r}")
        return value

    out = Path(args.out)
    written = []
    for index in range(args.count):
        item_seed = derive_key(seed, index)
        if family == "csl":
            g = gen_csl(need("n", args.n), need("skip", args.skip))
            params = f"n{args.n}-s{args.skip}"
        elif family == "circulant":
            skips = tuple(int(s) for s in need("skips", args.skips).split(","))
            g = gen_circulant(need("n", args.n), skips)
            params = f"n{args.n}-s{'-'.join(str(s) for s in skips)}"
        elif family == "cycle":
            g = gen_cycle(need("n", args.n))
            params = f"n{args.n}"
        elif family == "complete":
            g = gen_complete(need("n", args.n))
            params = f"n{args.n}"
        elif family == "gnp":
            g = gen_gnp(need("n", args.n), need("p", args.p), item_seed)
            params = f"n{args.n}-p{args.p}-seed{seed}"
        elif family == "random-regular":
            g = gen_random_regular(need("n", args.n), need("degree", args.degree), item_seed)
            params = f"n{args.n}-d{args.degree}-seed{seed}"
        else:
            g = gen_platonic(need("name", args.name))
            params = args.name.lower()
        path = out / family / params / f"{index}.graph"
        path.parent.mkdir(parents=True, exist_ok=True)
        write_graph(g, path)
        written.append(path)
    for path in written:
        print(path)
    return 0


def _cmd_iso(args) -> int:
    g1 = read_graph(args.a)
    g2 = read_graph(args.b)
    print("isomorphic" if isomorphic(g1, g2, node_budget=args.budget) else "non-isomorphic")
    return 0


_COMMANDS = {
    "refine": _cmd_refine,
    "walk": _cmd_walk,
    "augment": _cmd_augment,
    "distinguish": _cmd_distinguish,
    "gen": _cmd_gen,
    "iso": _cmd_iso,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except InvalidInputError as exc:
        print(f"iraug: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"iraug: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())
