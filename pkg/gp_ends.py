#!/usr/bin/env python3
"""
Ends of graph products of groups

Command-line front end for the gpends package:
- classify: exact number of ends with its witness, plus hyperbolicity and
  virtual freeness for finite vertex groups
- decompose: tree of groups over finite clique separators (JSON, optional DOT)
- oracle: empirical ends estimate from a Cayley ball (concrete cyclic groups)
- crosscheck: classifier against oracle on every small cyclic-labelled graph
- corpus: seeded random graph documents, one JSON document per line

Reports go to stdout, logs to stderr (and GPENDS_LOG_FILE when set).
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from tqdm import tqdm

from gpends.cli import (
    assert_agreement,
    cmd_classify,
    cmd_corpus,
    cmd_crosscheck,
    cmd_decompose,
    cmd_oracle,
    read_document,
    render_classify,
    render_crosscheck,
    render_decompose,
    render_oracle,
)
from gpends import __version__
from gpends.config import Config
from gpends.exceptions import CrossCheckDisagreement, GraphProductError, ResourceCapError


def setup_logging(verbose: bool = False):
    """Configure logging"""
    level = logging.DEBUG if verbose else logging.INFO

    handlers = [logging.StreamHandler(sys.stderr)]
    log_path = Config.log_path()
    if log_path is not None:
        handlers.append(logging.FileHandler(log_path))

    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def parse_pool(text: str) -> List[int]:
    """Comma-separated cyclic orders, e.g. '2,3'"""
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Number of ends, amalgam decompositions and Cayley-ball estimates for graph products of groups'
    )
    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}',
    )
    parser.add_argument(
        '--verbose',
        '-v',
        action='store_true',
        help='Enable verbose logging',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    # Commands reading one graph document
    document_parent = argparse.ArgumentParser(add_help=False)
    document_parent.add_argument(
        '--input',
        type=str,
        default='-',
        help="Graph document path, '-' for standard input (default: -)",
    )
    document_parent.add_argument(
        '--json',
        action='store_true',
        help='Print the report as JSON',
    )

    subparsers.add_parser(
        'classify',
        parents=[document_parent],
        help='Exact number of ends with witness',
    )

    decompose = subparsers.add_parser(
        'decompose',
        parents=[document_parent],
        help='Tree of groups over finite clique separators',
    )
    decompose.add_argument(
        '--dot',
        type=Path,
        help='Also write the tree as Graphviz DOT to this path',
    )

    oracle = subparsers.add_parser(
        'oracle',
        parents=[document_parent],
        help='Cayley-ball ends estimate (concrete cyclic vertex groups only)',
    )
    oracle.add_argument('--rmax', type=int, help=f'Largest inner radius (default: {Config.ORACLE_RMAX})')
    oracle.add_argument('--margin', type=int, help=f'Outer radius margin (default: {Config.ORACLE_MARGIN})')
    oracle.add_argument('--cap', type=int, help=f'Ball element cap (default: {Config.BALL_CAP})')
    oracle.add_argument('--csv', type=Path, help='Write sphere sizes and shell counts to this CSV file')

    crosscheck = subparsers.add_parser(
        'crosscheck',
        help='Compare classifier and oracle on all small cyclic-labelled graphs',
    )
    crosscheck.add_argument('--nmax', type=int, default=3, help='Largest vertex count (default: 3)')
    crosscheck.add_argument('--pool', type=parse_pool, default=[2, 3], help='Cyclic orders, e.g. 2,3 (default: 2,3)')
    crosscheck.add_argument('--rmax', type=int, help=f'Largest inner radius (default: {Config.CROSSCHECK_RMAX})')
    crosscheck.add_argument('--margin', type=int, help=f'Outer radius margin (default: {Config.CROSSCHECK_MARGIN})')
    crosscheck.add_argument('--cap', type=int, help=f'Ball element cap (default: {Config.BALL_CAP})')
    crosscheck.add_argument('--seed', type=int, default=0, help='Seed for the relabelling check (default: 0)')
    crosscheck.add_argument('--csv', type=Path, help='Write one record per case to this CSV file')
    crosscheck.add_argument('--json', action='store_true', help='Print the summary as JSON')

    corpus = subparsers.add_parser(
        'corpus',
        help='Seeded random graph documents as JSON Lines',
    )
    corpus.add_argument('--count', type=int, default=10, help='Number of documents (default: 10)')
    corpus.add_argument('-n', type=int, default=5, help='Vertices per graph (default: 5)')
    corpus.add_argument('--edge-prob', type=float, default=0.5, help='Edge probability (default: 0.5)')
    corpus.add_argument('--seed', type=int, default=0, help='Random seed (default: 0)')

    return parser


def emit(report: dict, as_json: bool, render) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + '\n')
    else:
        sys.stdout.write(render(report))
    sys.stdout.flush()


def run(args: argparse.Namespace) -> int:
    """Execute one subcommand and return its exit code"""
    logger = logging.getLogger(__name__)

    if args.command == 'classify':
        emit(cmd_classify(read_document(args.input)), args.json, render_classify)

    elif args.command == 'decompose':
        emit(cmd_decompose(read_document(args.input), args.dot), args.json, render_decompose)

    elif args.command == 'oracle':
        report = cmd_oracle(
            read_document(args.input),
            r_max=args.rmax,
            margin=args.margin,
            cap=args.cap,
            csv_path=args.csv,
        )
        emit(report, args.json, render_oracle)
        if report['cap_exceeded']:
            logger.warning("Cayley ball cap exceeded; the report is partial")
            return ResourceCapError.exit_code

    elif args.command == 'crosscheck':
        summary = cmd_crosscheck(
            args.nmax,
            args.pool,
            r_max=args.rmax,
            margin=args.margin,
            seed=args.seed,
            cap=args.cap,
            csv_path=args.csv,
        )

        logger.info("=" * 60)
        logger.info("CROSS-CHECK SUMMARY")
        logger.info("=" * 60)
        logger.info(f"Total cases:         {summary['total']}")
        logger.info(f"Conclusive:          {summary['conclusive']}")
        logger.info(f"Agreements:          {summary['agreements']}")
        logger.info(f"Inconclusive:        {summary['inconclusive']}")
        logger.info(f"Disagreements:       {summary['disagreements']}")
        logger.info(f"Relabel mismatches:  {summary['relabel_mismatches']}")
        logger.info(f"Elapsed time:        {summary['elapsed_seconds']:.2f} seconds")
        if summary['csv_path']:
            logger.info(f"CSV file:            {summary['csv_path']}")
        logger.info("=" * 60)

        emit(summary, args.json, render_crosscheck)
        assert_agreement(summary)

    elif args.command == 'corpus':
        for line in tqdm(
            cmd_corpus(args.count, args.n, args.edge_prob, args.seed),
            total=max(args.count, 0),
            desc="Generating",
            unit="graph",
        ):
            sys.stdout.write(line + '\n')
        sys.stdout.flush()

    return 0


def main(argv: Optional[List[str]] = None):
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Setup logging
    setup_logging(args.verbose)
    logger = logging.getLogger(__name__)

    try:
        # Validate configuration
        Config.validate()
        logger.debug(f"Running {args.command}")
        sys.exit(run(args))

    except KeyboardInterrupt:
        logger.info("\nInterrupted by user")
        sys.exit(130)

    except CrossCheckDisagreement as e:
        logger.error(str(e))
        for record in e.records:
            logger.error(f"  {record['hash']}: {record['graph']}")
        sys.exit(e.exit_code)

    except GraphProductError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.exit(e.exit_code)

    except ValueError as e:
        logger.error(str(e))
        sys.exit(1)

    except Exception as e:
        logger.exception(f"{args.command} failed: {e}")
        sys.exit(1)


if __name__ == '__main__':
    main()
