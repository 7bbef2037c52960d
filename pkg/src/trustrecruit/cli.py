"""Command-line entry point: ``run``, ``stats``, ``routes`` and ``fixture``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import ConfigError, parse_config
from .fixture import ADVOGATO_EDGES, ADVOGATO_HISTOGRAM, ADVOGATO_NODES, FixtureError, generate_fixture, load_graph
from .graph import GraphError, graph_stats, load_trust_graph
from .recruitment import enumerate_routes


def _histogram(text: str) -> dict[float, int]:
    hist = {}
    for item in text.split(","):
        value, _, count = item.partition(":")
        hist[float(value)] = int(count)
    return hist


def cmd_run(args) -> int:
    config = parse_config(args.config, args.set or ())
    from .report import write_metrics_csv
    from .sim import run_simulation

    graph = load_graph(config)
    result = run_simulation(config, graph)
    if args.dump_profiles:
        from .behavior import generate_profiles
        profiles = generate_profiles(graph, config, config.seed)
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / "profiles.csv").write_text(profiles.to_csv(), encoding="utf-8")
    for path in write_metrics_csv(result, args.out):
        print(path)
    return 0


def cmd_stats(args) -> int:
    graph = load_trust_graph(args.graph)
    stats = graph_stats(graph)
    print(f"nodes\t{stats.node_count}")
    print(f"edges\t{stats.edge_count}")
    for weight, count in stats.rating_histogram.items():
        print(f"rating {weight!r}\t{count}")
    return 0


def cmd_routes(args) -> int:
    graph = load_trust_graph(args.graph)
    for route in enumerate_routes(graph, args.src, args.dst, args.hops):
        print(f"{route.trust!r}\t{route.length}\t{' '.join(route.nodes)}")
    return 0


def cmd_fixture(args) -> int:
    text = generate_fixture(args.seed, args.nodes, args.edges, _histogram(args.histogram))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trustrecruit", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate all configured strategies and write CSVs")
    run.add_argument("--config", help="key=value configuration file")
    run.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config key (repeatable)")
    run.add_argument("--out", default="results", help="output directory (default: results)")
    run.add_argument("--dump-profiles", action="store_true", help="also write profiles.csv")
    run.set_defaults(func=cmd_run)

    stats = sub.add_parser("stats", help="node/edge counts and rating histogram of an edge list")
    stats.add_argument("graph")
    stats.set_defaults(func=cmd_stats)

    routes = sub.add_parser("routes", help="list every route between two nodes")
    routes.add_argument("graph")
    routes.add_argument("src")
    routes.add_argument("dst")
    routes.add_argument("--hops", "-L", type=int, default=3)
    routes.set_defaults(func=cmd_routes)

    fixture = sub.add_parser("fixture", help="generate a synthetic Advogato-like edge list")
    fixture.add_argument("--seed", type=int, default=20071013)
    fixture.add_argument("--nodes", type=int, default=ADVOGATO_NODES)
    fixture.add_argument("--edges", type=int, default=ADVOGATO_EDGES)
    fixture.add_argument("--histogram", default=",".join(f"{k}:{v}" for k, v in ADVOGATO_HISTOGRAM.items()),
                         help="rating:count pairs, comma-separated")
    fixture.add_argument("--out", default="-", help="output file (default: stdout)")
    fixture.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ConfigError, GraphError, FixtureError, ValueError, OSError) as exc:
        print(f"trustrecruit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
