#!/usr/bin/env python3
"""
Moment-Angle Toolkit

Command-line front end for cohomology of moment-angle complexes:
bigraded Betti tables, Massey products, nestohedra and the differential
ring of simple polytopes.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.config.cli_config import MomentAngleConfig
from cli.toolkit import MomentAngleToolkit
from common.errors import ToolkitError
from nestohedra.families import FAMILIES
from poly_ring.identities import identity_ids
from poly_ring.series import SERIES, SERIES_IDENTITIES


def setup_logging(config: MomentAngleConfig, level: Optional[str] = None) -> logging.Logger:
    """Set up logging configuration; stdout stays reserved for reports"""
    log_config = config.get_logging_config()
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_config["log_file"]:
        handlers.append(logging.FileHandler(log_config["log_file"]))
    logging.basicConfig(
        level=getattr(logging, (level or log_config["log_level"]).upper()),
        format=log_config["log_format"],
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="complex as JSON {vertices, maximal_faces}")
    parser.add_argument("--family", choices=sorted(FAMILIES))
    parser.add_argument("--n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moment_angle", description="Moment-angle complex cohomology toolkit", allow_abbrev=False)
    parser.add_argument("--field", help="Q or a prime p (default from MAC_FIELD)")
    parser.add_argument("--limit", type=int, help="largest vertex count for subset enumeration")
    parser.add_argument("--budget", type=int, help="indeterminacy bits for exhaustive Massey enumeration")
    parser.add_argument("--order", type=int, help="series truncation order")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--strategy", choices=("auto", "vanishing", "exhaustive-gf2"))
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    commands = parser.add_subparsers(dest="command", required=True)

    complex_parser = commands.add_parser("complex", help="face data of a simplicial complex")
    complex_parser.add_argument(
        "action", nargs="?", default="info",
        choices=("info", "nonfaces", "ideal", "retraction", "decompose", "multiwedge"),
    )
    _add_source(complex_parser)
    complex_parser.add_argument("--J", help="comma-separated multiwedge exponents")
    complex_parser.add_argument("--max-size", type=int)

    betti_parser = commands.add_parser("betti", help="bigraded Betti numbers of Z_K")
    _add_source(betti_parser)
    betti_parser.add_argument("--duality", action="store_true")
    betti_parser.add_argument("--compare-fields", type=int, metavar="P")

    massey_parser = commands.add_parser("massey", help="Massey products in H*(Z_K)")
    _add_source(massey_parser)
    massey_parser.add_argument("--k", help="k or a range a..b")
    massey_parser.add_argument("--classes", help="'v-labels|u-labels; ...' with '+' between labels")
    massey_parser.add_argument("--search", action="store_true", help="look for a nontrivial triple product")
    massey_parser.add_argument("--transfer", metavar="R,S", help="restrict P_Mas^S products to P_Mas^R")

    nesto_parser = commands.add_parser("nesto", help="building sets and nestohedra")
    nesto_parser.add_argument("action", choices=("show", "validate", "boundary", "contraction", "fmas"))
    nesto_parser.add_argument("--input", help="building set as JSON {ground, sets}")
    nesto_parser.add_argument("--family", choices=sorted(f for f in FAMILIES if FAMILIES[f].building is not None))
    nesto_parser.add_argument("--n", type=int)
    nesto_parser.add_argument("--S", help="comma-separated elements")
    nesto_parser.add_argument("--members", help="';'-separated comma lists")
    nesto_parser.add_argument("--sizes", default="2,2", help="comma-separated summand sizes")
    nesto_parser.add_argument("--l", type=int, default=2)

    ring_parser = commands.add_parser("ring", help="differential ring of simple polytopes")
    ring_parser.add_argument("action", choices=("verify", "closure", "boundary", "gdfp", "fc"))
    ring_parser.add_argument("--id", choices=identity_ids())
    ring_parser.add_argument("--family", choices=sorted(FAMILIES))
    ring_parser.add_argument("--n", type=int)
    ring_parser.add_argument("--dim", type=int)
    ring_parser.add_argument("--facet")
    ring_parser.add_argument("--times", type=int, default=1)

    series_parser = commands.add_parser("series", help="generating series in the polytope ring")
    series_parser.add_argument("action", choices=("build", "verify"))
    series_parser.add_argument("--family", choices=sorted(SERIES))
    series_parser.add_argument("--id", choices=sorted(SERIES_IDENTITIES))
    series_parser.add_argument("--q", action="store_true", help="include the q-parameter")
    return parser


def _check_arguments(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    required = {
        ("ring", "verify"): ("id", "n"),
        ("ring", "closure"): ("family", "dim"),
        ("ring", "gdfp"): ("family", "n"),
        ("series", "build"): ("family",),
        ("series", "verify"): ("id",),
        ("nesto", "contraction"): ("S",),
    }
    for name in required.get((args.command, getattr(args, "action", None)), ()):
        if getattr(args, name) is None:
            parser.error(f"{args.command} {args.action} needs --{name}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the moment-angle toolkit"""
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_arguments(parser, args)
    config = MomentAngleConfig()
    logger = setup_logging(config, args.log_level)
    try:
        settings = config.build_settings({
            "field": args.field,
            "limit": args.limit,
            "budget": args.budget,
            "order": args.order,
            "threads": args.threads,
            "strategy": args.strategy,
        })
        as_json = args.json or config.get_runtime_config()["json"]
        toolkit = MomentAngleToolkit(settings, config, as_json)
        return toolkit.run(args)
    except ToolkitError as e:
        logger.error(f"❌ {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
