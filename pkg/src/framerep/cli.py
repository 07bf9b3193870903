"""Command-line interface: a thin adapter from files and flags onto the library.

Every command maps 1:1 onto a library operation; no numerical logic lives
here. Inputs and outputs are the JSON formats of ``jsonio``; outputs are
written atomically. Exit codes: 0 success, 2 parse error, 3 dimension
mismatch, 4 not a frame, 5 not bijective, 1 any other failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import (
    DimensionMismatch,
    FramerepError,
    NotAFrame,
    NotBijective,
    ParseError,
)
from .frames import GENERATOR_KINDS, canonical_dual, frame_bounds, gen_frame, gram
from .jsonio import (
    dump_json,
    frame_from_obj,
    frame_to_obj,
    load_json,
    matrix_from_obj,
    matrix_to_obj,
    report_to_obj,
    vector_from_obj,
)
from .linalg import Tolerance
from .oprep import invert_from_matrix, is_representable, matrix_rep, operator_synth
from .solver import solve
from .verify import SuiteConfig, run_suite

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_NOT_A_FRAME = 4
EXIT_NOT_BIJECTIVE = 5

_EPILOG = """exit codes:
  0  success
  2  missing or malformed input file
  3  dimension mismatch
  4  input vectors do not form a frame
  5  operator or coefficient map is not bijective
  1  any other failure
"""


def _load_frame(path):
    return frame_from_obj(load_json(path))


def _load_matrix(path):
    return matrix_from_obj(load_json(path))


def _tolerance(args) -> Tolerance:
    return Tolerance(rank_rel=args.rank_rel, eq_rel=args.eq_rel)


def _cmd_gen(args) -> int:
    params = {}
    if args.dim is not None:
        params["dim"] = args.dim
    if args.size is not None:
        params["size"] = args.size
    if args.lattice_a is not None:
        params["a"] = args.lattice_a
    if args.lattice_b is not None:
        params["b"] = args.lattice_b
    if args.copies is not None:
        params["copies"] = args.copies
    if args.epsilon is not None:
        params["epsilon"] = args.epsilon
    frame = gen_frame(args.kind, seed=args.seed, **params)
    dump_json(frame_to_obj(frame), args.out)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    bounds = frame_bounds(_load_frame(args.frame))
    print(f"A={bounds.lower:.10g} B={bounds.upper:.10g}")
    return EXIT_OK


def _cmd_dual(args) -> int:
    dump_json(frame_to_obj(canonical_dual(_load_frame(args.frame))), args.out)
    return EXIT_OK


def _cmd_gram(args) -> int:
    g = gram(_load_frame(args.left), _load_frame(args.right))
    dump_json(matrix_to_obj(g.matrix), args.out)
    return EXIT_OK


def _cmd_represent(args) -> int:
    m = matrix_rep(_load_matrix(args.op), _load_frame(args.row), _load_frame(args.col))
    dump_json(matrix_to_obj(m.matrix), args.out)
    return EXIT_OK


def _cmd_synth(args) -> int:
    o = operator_synth(
        _load_matrix(args.matrix), _load_frame(args.row), _load_frame(args.col)
    )
    dump_json(matrix_to_obj(o.matrix), args.out)
    return EXIT_OK


def _cmd_check_representable(args) -> int:
    report = is_representable(
        _load_matrix(args.matrix),
        _load_frame(args.row),
        _load_frame(args.col),
        _tolerance(args),
    )
    if args.out:
        dump_json(report_to_obj(report), args.out)
    verdict = "representable" if report.representable else "not representable"
    print(f"{verdict} (sandwich residual {report.sandwich_residual:.3e})")
    return EXIT_OK


def _cmd_invert(args) -> int:
    inverse = invert_from_matrix(
        _load_matrix(args.matrix),
        _load_frame(args.row),
        _load_frame(args.col),
        _tolerance(args),
    )
    dump_json(matrix_to_obj(inverse.matrix), args.out)
    return EXIT_OK


def _cmd_solve(args) -> int:
    report = solve(
        _load_matrix(args.op),
        vector_from_obj(load_json(args.rhs)),
        _load_frame(args.row),
        _load_frame(args.col),
        _tolerance(args),
    )
    dump_json(report_to_obj(report), args.out)
    print(f"residual={report.residual:.3e} dense_agreement={report.dense_agreement:.3e}")
    return EXIT_OK


def _parse_dims(text: str) -> tuple[tuple[int, int, int], ...]:
    triples = []
    for chunk in text.split(";"):
        parts = [p for p in chunk.split(",") if p.strip()]
        if len(parts) != 3:
            raise ParseError(f"expected 'd1,d2,d3' triples separated by ';', got {text!r}")
        triples.append(tuple(int(p) for p in parts))
    return tuple(triples)


def _cmd_verify(args) -> int:
    kwargs = {"seed": args.seed, "trials": args.trials, "tolerance": _tolerance(args)}
    if args.dims:
        kwargs["dims"] = _parse_dims(args.dims)
    if args.sizes:
        kwargs["frame_sizes"] = tuple(int(s) for s in args.sizes.split(",") if s.strip())
    report = run_suite(SuiteConfig(**kwargs))
    print(report.to_text_table())
    if args.out:
        dump_json(report.to_obj(), args.out)
    return EXIT_OK if report.passed else EXIT_OTHER


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framerep",
        description="Frame-based representation, inversion, and verification "
        "of linear operators on finite-dimensional complex spaces.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--rank-rel", type=float, default=1e-10, dest="rank_rel",
                        help="relative singular-value cutoff (default 1e-10)")
    parser.add_argument("--eq-rel", type=float, default=1e-9, dest="eq_rel",
                        help="relative equality threshold (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named frame fixture")
    p.add_argument("--kind", required=True, choices=GENERATOR_KINDS)
    p.add_argument("--dim", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--lattice-a", type=int, dest="lattice_a")
    p.add_argument("--lattice-b", type=int, dest="lattice_b")
    p.add_argument("--copies", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bounds", help="print the optimal frame bounds A and B")
    p.add_argument("frame")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("dual", help="write the canonical dual frame")
    p.add_argument("frame")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("gram", help="write the cross-Gram matrix of two frames")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_gram)

    p = sub.add_parser("represent", help="coefficient matrix of an operator")
    p.add_argument("--op", required=True)
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("synth", help="operator synthesized from a coefficient matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_synth)

    p = sub.add_parser(
        "check-representable",
        help="decide whether a coefficient matrix represents an operator",
    )
    p.add_argument("--matrix", required=True)
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_check_representable)

    p = sub.add_parser(
        "invert", help="invert the operator synthesized from a coefficient matrix"
    )
    p.add_argument("--matrix", required=True)
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_invert)

    p = sub.add_parser("solve", help="solve O f = g through the coefficient domain")
    p.add_argument("--op", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--dims", help="space dimensions as 'd1,d2,d3;d1,d2,d3;...'")
    p.add_argument("--sizes", help="redundant frame sizes as 'n1,n2,...'")
    p.add_argument("--out", help="also write the report as JSON")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except NotAFrame as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_FRAME
    except NotBijective as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_BIJECTIVE
    except (FramerepError, ValueError, np.linalg.LinAlgError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
