"""``msdist`` command line: ``dist``, ``embed`` and ``audit``.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

import argparse
import sys

from msdist.errors import ConfigurationError
from msdist.pipeline import (
    FAMILIES,
    GROUNDS,
    DistanceConfig,
    audit_command,
    embed_command,
    load_corpus,
    pairwise_matrix,
    write_matrix_csv,
)

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _common(p):
    p.add_argument("--input", help="line-delimited JSON corpus")
    p.add_argument("--distance", default="fp-matching", choices=FAMILIES)
    p.add_argument("--ground", default="lcs", choices=GROUNDS)
    p.add_argument("--rho", type=float)
    p.add_argument("--tau", type=float)
    p.add_argument("--steinhaus-ground", action="store_true", help="normalise the ground metric")
    p.add_argument("--steinhaus-outer", action="store_true", help="normalise the collection distance")
    p.add_argument("--outer-reference", default="empty", help="'empty' or a corpus id")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output")


def build_parser():
    parser = argparse.ArgumentParser(prog="msdist", description="Distances between multisets and sequences.")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("dist", help="pairwise distance matrix as CSV"))
    _common(sub.add_parser("embed", help="distance matrix plus classical MDS coordinates"))
    audit = sub.add_parser("audit", help="sample triples and check the metric axioms")
    _common(audit)
    audit.add_argument("-n", "--samples", type=int, default=1000)
    audit.add_argument("--seed", type=int, default=0)
    return parser


def _config(args):
    return DistanceConfig(
        family=args.distance,
        ground=args.ground,
        rho=args.rho,
        tau=args.tau,
        steinhaus_ground=args.steinhaus_ground,
        steinhaus_outer=args.steinhaus_outer,
        outer_reference=args.outer_reference,
    )


def _run(args):
    config = _config(args)
    if args.command == "audit":
        corpus = load_corpus(args.input) if args.input else None
        report = audit_command(config, args.samples, corpus=corpus, seed=args.seed)
        text = report.render()
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return EXIT_OK
    if not args.input:
        raise ConfigurationError("--input is required")
    corpus = load_corpus(args.input)
    if args.command == "dist":
        D = pairwise_matrix(corpus, config, args.workers)
        write_matrix_csv(args.output or "/dev/stdout", corpus.ids, D)
        return EXIT_OK
    D, emb = embed_command(corpus, config, args.dim, args.output or ".", args.workers)
    print(f"embedded {len(corpus)} observations in {args.dim} dimensions, stress {emb.stress:.6g}")
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except OSError as exc:
        print(f"msdist: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"msdist: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
