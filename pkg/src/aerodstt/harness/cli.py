"""Command-line entry point.

    aerodstt <command> [--config cfg.yaml] [--out DIR] [--seed N]
                       [--samples N] [--methods a,b,c]

Commands: reference, stt-validate, eig-studies, direction-study,
frobenius, monte-carlo. Every command writes CSVs plus one JSON summary
into the output directory; all outputs embed the resolved-config hash.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .config import ALL_METHODS, load_config
from .experiments import (
    cmd_direction_study,
    cmd_eig_studies,
    cmd_frobenius,
    cmd_monte_carlo,
    cmd_reference,
    cmd_stt_validate,
)

COMMANDS = {
    "reference": cmd_reference,
    "stt-validate": cmd_stt_validate,
    "eig-studies": cmd_eig_studies,
    "direction-study": cmd_direction_study,
    "frobenius": cmd_frobenius,
    "monte-carlo": cmd_monte_carlo,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aerodstt",
        description="Aerocapture perturbation-propagation experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", default=None, help="YAML config file (optional)")
        p.add_argument("--out", default="out", help="output directory")
        p.add_argument("--seed", type=int, default=None,
                       help="override the Monte Carlo seed")
        p.add_argument("--samples", type=int, default=None,
                       help="override the Monte Carlo sample count")
        p.add_argument("--methods", default=None,
                       help=f"comma list from {','.join(ALL_METHODS)}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.seed is not None:
            config = replace(config, monte_carlo=replace(config.monte_carlo, seed=args.seed))
        if args.samples is not None:
            config = replace(
                config, monte_carlo=replace(config.monte_carlo, n_samples=args.samples)
            )
        if args.methods is not None:
            names = tuple(m.strip() for m in args.methods.split(",") if m.strip())
            bad = set(names) - set(ALL_METHODS)
            if bad:
                raise KeyError(f"unknown methods: {sorted(bad)}")
            config = replace(config, methods=names)
        summary = COMMANDS[args.command](config, args.out)
    except Exception as exc:  # surface failures with a nonzero exit code
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in summary.get("outputs", []):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
