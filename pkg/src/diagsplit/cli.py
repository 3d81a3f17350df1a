"""Command line entry point: ``diagsplit verify | graded | eval | section``."""

from __future__ import annotations

import argparse
import json
import sys

from . import pipeline
from .algebra import PolyRing, T, is_prime
from .splitting import SplittingOperator, _variables_in_text


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _primes(text: str) -> list[int]:
    if not text.strip():
        return []
    return [_prime(t.strip()) for t in text.split(",")]


def _rank(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be >= 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diagsplit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify the diagonal splitting for one (n, p)")
    v.add_argument("--n", type=_rank, required=True)
    v.add_argument("--p", type=_prime, required=True)
    v.add_argument("--checks", choices=pipeline.CHECK_GROUPS, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", help="write the report here (figures go next to it)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--force", action="store_true", help="lift the resource guard")
    v.add_argument("--all-kempf", action="store_true", help="every Kempf vector, not only rectangles, at n >= 5")
    v.add_argument("--workers", type=int, default=None)
    v.add_argument("--no-figures", action="store_true")
    v.add_argument("--no-timings", action="store_true", help="zero all durations (byte-stable reports)")

    g = sub.add_parser("graded", help="l_j ranks, dimension identity and Rees checks")
    g.add_argument("--nmax", type=int, required=True)
    g.add_argument("--primes", type=_primes, default=[2, 3, 5])
    g.add_argument("--dmax", type=int, default=None, help="default 2n+3 for each n")
    g.add_argument("--report")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--workers", type=int, default=None)
    g.add_argument("--no-figures", action="store_true")
    g.add_argument("--no-timings", action="store_true")

    e = sub.add_parser("eval", help="apply the operator of a section to a polynomial")
    e.add_argument("--expr", required=True, help="polynomial text, e.g. 'x[2][1]^2*y[2][1]'")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--op", help="section file written by 'diagsplit section'")
    src.add_argument("--section", help="section polynomial text (needs --p)")
    e.add_argument("--p", type=_prime)
    e.add_argument("--rees", action="store_true", help="treat t as the Rees parameter and apply sigma[t]")

    s = sub.add_parser("section", help="write the section f^(p-1) to a file")
    s.add_argument("--n", type=_rank, required=True)
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--out", required=True)
    return ap


def _finish(report, args) -> int:
    if not pipeline.write_report(report, args.format, args.report):
        return 1
    code = 0 if report.passed else 1
    if args.report:
        print(f"{report.kind}: overall {report.overall}; report written to {args.report}")
        if not args.no_figures:
            from .figures import render_figures

            for path in render_figures(report, args.report):
                print(f"figure: {path}")
    return code


def _cmd_verify(args) -> int:
    report = pipeline.verify_theorem(args.n, args.p, args.checks, seed=args.seed, force=args.force,
                                     all_kempf=args.all_kempf, workers=args.workers,
                                     timings=not args.no_timings)
    return _finish(report, args)


def _cmd_graded(args) -> int:
    report = pipeline.verify_graded(args.nmax, args.primes, args.dmax, workers=args.workers,
                                    timings=not args.no_timings)
    return _finish(report, args)


def _cmd_eval(args, ap) -> int:
    if args.op:
        with open(args.op, encoding="utf-8") as fh:
            op = SplittingOperator.from_dict(json.load(fh))
    else:
        if args.p is None:
            ap.error("--section needs --p")
        variables = _variables_in_text([args.section, args.expr])
        variables = [v for v in variables if v != T]
        op = SplittingOperator(PolyRing(args.p, variables).parse(args.section))
    if args.rees:
        from .graded import sigma_t_apply

        ring = op.ring.extend([T])
        print(sigma_t_apply(op, ring.parse(args.expr)))
    else:
        print(op.apply(op.ring.parse(args.expr)))
    return 0


def _cmd_section(args) -> int:
    from .diagonal import f_operator

    op = f_operator(args.n, args.p)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(op.to_dict(), fh)
        fh.write("\n")
    print(f"wrote {len(op.section)} terms to {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "graded":
            return _cmd_graded(args)
        if args.command == "eval":
            return _cmd_eval(args, ap)
        return _cmd_section(args)
    except (ValueError, KeyError) as exc:
        print(f"diagsplit: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"diagsplit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
