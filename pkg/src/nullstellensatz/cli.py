"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 parse or other input error,
3 duplicate element in a set, 4 grid-size hypothesis violated,
5 benchmark cap exceeded.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import bench, report
from .errors import (CapExceededError, DuplicateElementError, GridSizeError, InputError,
                     InternalError, ParseError, UsageError)
from .multipoly import parse_polynomial
from .nonvanishing import (CROSSCHECK_LIMIT, EvaluationSet, GridSpec, certify_nonvanishing,
                           find_witness, lambda_family, phi_fast, phi_grid, verify_lambda_family)
from .ring import get_domain

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_DUPLICATE = 3
EXIT_SIZE = 4
EXIT_CAP = 5


@dataclass
class JobSpec:
    command: str
    domain: object
    poly_text: Optional[str]
    sets_text: Optional[str]
    term: Optional[tuple] = None
    fmt: str = "text"
    threads: int = 1


def parse_sets(text, domain):
    """``"0,1;0,t"`` -> list of element lists, one per axis.

    Parse errors report positions in *text*.
    """
    axes = []
    offset = 0
    for chunk in text.split(";"):
        elements = []
        inner = offset
        for piece in chunk.split(","):
            if not piece.strip():
                raise ParseError("empty set element", text, inner)
            elements.append(domain.parse(piece, inner))
            inner += len(piece) + 1
        axes.append(elements)
        offset += len(chunk) + 1
    return axes


def parse_term(text):
    try:
        exps = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ParseError("--term must be comma-separated nonnegative integers", text, 0) from None
    if any(e < 0 for e in exps):
        raise ParseError("--term exponents must be nonnegative", text, 0)
    return exps


def build_grid(job):
    if job.sets_text is None:
        raise InputError("--sets is required")
    return GridSpec(parse_sets(job.sets_text, job.domain), job.domain)


def build_polynomial(job, nvars):
    if job.poly_text is None:
        raise InputError("--poly is required")
    return parse_polynomial(job.poly_text, job.domain, nvars)


def _emit(out, job, text, records):
    out.write(report.dump_records(records) if job.fmt == "structured" else text)


def cmd_lambda(job, out):
    axes = parse_sets(job.sets_text, job.domain)
    texts, records = [], []
    for points in axes:
        fam = lambda_family(EvaluationSet(points, job.domain))
        rep = verify_lambda_family(fam)
        texts.append(report.lambda_text(fam, rep))
        records.append(report.lambda_record(fam, rep))
    _emit(out, job, "\n".join(texts), records)
    return EXIT_OK


def cmd_phi(job, out):
    grid = build_grid(job)
    f = build_polynomial(job, grid.nvars)
    fams = [lambda_family(a) for a in grid.axes]
    fast = phi_fast(f, fams)
    by_grid = phi_grid(f, grid, fams, job.threads) if grid.size <= CROSSCHECK_LIMIT else None
    _emit(out, job, report.phi_text(f, grid, fams, fast, by_grid),
          [report.phi_record(f, grid, fams, fast, by_grid)])
    if by_grid is not None and by_grid != fast:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_certify(job, out):
    grid = build_grid(job)
    f = build_polynomial(job, grid.nvars)
    cert = certify_nonvanishing(f, grid, job.term, threads=job.threads)
    _emit(out, job, report.certificate_text(cert), [report.certificate_record(cert)])
    return EXIT_OK if cert.certified else EXIT_INTERNAL


def cmd_witness(job, out):
    grid = build_grid(job)
    f = build_polynomial(job, grid.nvars)
    hit = find_witness(f, grid, threads=job.threads)
    _emit(out, job, report.witness_text(f, grid, hit), [report.witness_record(f, grid, hit)])
    return EXIT_OK


def cmd_bench(args, job, out):
    results = []
    if args.order is not None:
        results.append(bench.bench_determinant(args.order, args.reps, job.domain))
    if args.grid is not None:
        try:
            sizes = [int(p) for p in args.grid.split(",")]
        except ValueError:
            raise ParseError("--grid must be comma-separated sizes", args.grid, 0) from None
        results.append(bench.bench_grid(sizes, args.reps, job.domain, args.seed))
    if not results:
        raise InputError("bench needs --order and/or --grid")
    _emit(out, job, bench.format_table(results), bench.bench_records(results))
    return EXIT_OK if all(r.equal for r in results) else EXIT_INTERNAL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", choices=["int", "intpoly"], default="int",
                        help="integers or integer polynomials in t")
    common.add_argument("--format", dest="fmt", choices=["text", "structured"], default="text")
    common.add_argument("--threads", type=int, default=1)

    grid_args = argparse.ArgumentParser(add_help=False)
    grid_args.add_argument("--poly", help='polynomial, e.g. "x1^2*x2 - 3*x2 + 1"')
    grid_args.add_argument("--sets", help='evaluation sets, axes separated by ";", e.g. "0,1;0,1,2"')

    parser = argparse.ArgumentParser(
        prog="nullcert",
        description="Vandermonde-cofactor certificates that a polynomial is nonzero on a grid.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", parents=[common], help="cofactor coefficients for a set")
    p.add_argument("set", nargs="?", help='elements, e.g. "0,1,2"')
    p.add_argument("--sets", dest="sets_opt")

    sub.add_parser("phi", parents=[common, grid_args], help="evaluate phi two ways")

    p = sub.add_parser("certify", parents=[common, grid_args], help="certify f is nonzero on the grid")
    p.add_argument("--term", help="exponents of the chosen leading term, e.g. 2,1")

    sub.add_parser("witness", parents=[common, grid_args], help="scan the grid for a nonzero point")

    p = sub.add_parser("bench", parents=[common], help="time paired algorithms")
    p.add_argument("--order", type=int, help=f"Vandermonde order (<= {bench.MAX_ORDER})")
    p.add_argument("--grid", help="per-axis set sizes, e.g. 4,4,4")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


_VALUE_FLAGS = ("--poly", "--sets", "--term")


def _attach_values(argv):
    # argparse reads "-1,0,1" or "-x1 + 2" as an option; bind them to their flag.
    out = []
    it = iter(argv)
    for arg in it:
        if arg in _VALUE_FLAGS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_values(argv))
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    try:
        domain = get_domain(args.domain)
        if args.command == "lambda":
            sets_text = args.set if args.set is not None else args.sets_opt
            if sets_text is None:
                raise InputError("lambda needs a set, e.g. 0,1,2")
        else:
            sets_text = getattr(args, "sets", None)
        term = getattr(args, "term", None)
        job = JobSpec(
            command=args.command,
            domain=domain,
            poly_text=getattr(args, "poly", None),
            sets_text=sets_text,
            term=parse_term(term) if term else None,
            fmt=args.fmt,
            threads=max(1, args.threads),
        )
        if args.command == "bench":
            return cmd_bench(args, job, out)
        return {
            "lambda": cmd_lambda,
            "phi": cmd_phi,
            "certify": cmd_certify,
            "witness": cmd_witness,
        }[args.command](job, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except DuplicateElementError as exc:
        err.write(f"duplicate element: {exc}\n")
        return EXIT_DUPLICATE
    except GridSizeError as exc:
        err.write(f"grid size: {exc}\n")
        return EXIT_SIZE
    except CapExceededError as exc:
        err.write(f"cap exceeded: {exc}\n")
        return EXIT_CAP
    except (InputError, UsageError) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_PARSE
    except InternalError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
