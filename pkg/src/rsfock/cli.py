"""Command-line front end: ``rsfock {apply,verify,pairing,char,matrix,claims}``.

Exit codes: 0 success, 1 a verification found failures, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import List, Optional, Sequence

from . import chars, relcheck
from .fock import (
    FockConfig,
    FockVector,
    TruncationOverflow,
    Word,
    WordParseError,
    apply_word,
    operator_matrix,
)
from .laurent import Laurent2
from .partitions import CapExceeded, Partition, PartitionParseError


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser, multi_n: bool = False) -> None:
    if multi_n:
        p.add_argument("--n", type=int, nargs="+", required=True, help="rank(s) of affine sl_n")
        p.add_argument("--offset", default="0", help="charge in Z_n, or 'all'")
    else:
        p.add_argument("--n", type=int, required=True, help="rank of affine sl_n")
        p.add_argument("--offset", type=int, default=0, help="charge in Z_n")
    p.add_argument("--max", type=int, default=None, help="truncation bound N (max partition size)")
    p.add_argument("--d-convention", choices=["cellcount", "literal"], default="cellcount")
    p.add_argument("--orientation", choices=["standard", "flip"], default="standard")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsfock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply a word (right to left) to a basis vector")
    _add_common(p)
    p.add_argument("--op", required=True, help='word, e.g. "e1 f1" or "w0^-1 D"')
    p.add_argument("--state", default="-", help="partition such as 2,1; '-' is the empty diagram")

    p = sub.add_parser("verify", help="check the defining relations on truncated modules")
    _add_common(p, multi_n=True)
    p.add_argument("--relations", default="all", help="'all' or comma-separated tags")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall-clock millis in JSON")

    p = sub.add_parser("pairing", help="infer the conjugation pairing table")
    _add_common(p)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("char", help="weight multiplicities and graded dimensions")
    _add_common(p)

    p = sub.add_parser("matrix", help="export an operator matrix")
    _add_common(p)
    p.add_argument("--op", required=True)

    p = sub.add_parser("claims", help="run the node-counting identity suite")
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--max", type=int, default=14)
    p.add_argument("--sample", type=int, default=0, help="extra random partitions beyond --max")
    p.add_argument("--sample-size", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _config(args, n: int, offset: int, default_max: int = 8) -> FockConfig:
    try:
        return FockConfig(n, offset, default_max if args.max is None else args.max,
                          args.d_convention, args.orientation)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_reports(reports, fmt: str, timing: bool = False, out=sys.stdout) -> None:
    if fmt == "json":
        result = relcheck.RunResult(list(reports))
        out.write(result.to_json(timing) + "\n")
    else:
        for rep in reports:
            out.write(rep.line() + "\n")


def cmd_apply(args, out) -> int:
    try:
        word = Word.parse(args.op)
        lam = Partition.parse(args.state)
    except (WordParseError, PartitionParseError) as exc:
        raise UsageError(str(exc)) from None
    if not word.symbols:
        raise UsageError("--op must contain at least one generator")
    default_max = max(8, lam.size + word.f_degree)
    cfg = _config(args, args.n, args.offset, default_max)
    try:
        result = apply_word(word, FockVector.basis(lam), cfg)
    except (TruncationOverflow, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps(result.to_json_obj()) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["partition", "coeff"])
        for row in result.to_json_obj():
            w.writerow([str(Partition(row["partition"])), row["coeff"]])
    else:
        out.write(str(result) + "\n")
    return 0


def _offsets(text: str, n: int) -> List[int]:
    if text == "all":
        return list(range(n))
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"invalid --offset {text!r}") from None


def cmd_verify(args, out) -> int:
    if args.format == "csv":
        raise UsageError("verify supports text or json output")
    relations = None
    if args.relations != "all":
        relations = [t.strip() for t in args.relations.split(",") if t.strip()]
        unknown = set(relations) - set(relcheck.TAGS)
        if unknown:
            raise UsageError(f"unknown relation tags: {', '.join(sorted(unknown))}")
    cfgs = [_config(args, n, o) for n in args.n for o in _offsets(args.offset, n)]
    result = relcheck.run_all(cfgs, jobs=args.jobs, relations=relations)
    _emit_reports(result.reports, args.format, args.timing, out)
    if args.format == "text":
        out.write(f"overall: {'pass' if result.passed else 'fail'} "
                  f"({len(result.failing())} failing of {len(result.reports)})\n")
    return result.exit_code


def cmd_pairing(args, out) -> int:
    cfg = _config(args, args.n, args.offset, args.n + 4)
    observations = relcheck.observe_pairing(cfg)
    diffs = relcheck.pairing_diffs(cfg, observations)
    status = 0
    try:
        table, _ = relcheck.infer_pairing(cfg, jobs=args.jobs)
        inferred = table.to_json_obj()
    except relcheck.InconsistentRatio:
        inferred, status = None, 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    printed = relcheck.printed_pairing(cfg.n)
    if args.format == "json":
        obj = {
            "n": cfg.n, "offset": cfg.offset, "N": cfg.N,
            "consistent": inferred is not None,
            "inferred": inferred,
            "observed": [{"i": i, "j": j, "values": [str(Laurent2.monomial(*m)) for m in seen]}
                         for (i, j), seen in sorted(observations.items())],
            "printed": printed.to_json_obj(),
            "diffs": [d.to_json_obj() for d in diffs],
        }
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        for (i, j), seen in sorted(observations.items()):
            values = ", ".join(str(Laurent2.monomial(*m)) for m in seen)
            flag = "" if len(seen) == 1 else "  <- not constant"
            out.write(f"<{i},{j}> observed {{{values}}} printed {printed.monomial(i, j)}{flag}\n")
        for d in diffs:
            out.write(f"diff <{d.i},{d.j}>: observed "
                      f"{{{', '.join(str(Laurent2.monomial(*m)) for m in d.observed)}}} "
                      f"vs printed {Laurent2.monomial(*d.printed)}"
                      f" (agree at r=q, s=q^-1: {'yes' if d.agrees_specialized else 'no'})\n")
        out.write("consistent\n" if inferred is not None else "inconsistent conjugation ratios\n")
    return status


def cmd_char(args, out) -> int:
    cfg = _config(args, args.n, args.offset)
    try:
        rows = chars.multiplicity_rows(cfg)
        series = chars.dimension_series(cfg)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps({"multiplicities": rows, "dimensions": series}, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["size", "dimension"])
        for k, d in enumerate(series):
            w.writerow([k, d])
    else:
        out.write("dimensions: " + " ".join(map(str, series)) + "\n")
        for row in rows:
            m = ",".join(map(str, row["mVector"]))
            out.write(f"size {row['size']}: m=({m}) x{row['count']}\n")
    return 0


def cmd_matrix(args, out) -> int:
    try:
        word = Word.parse(args.op)
    except WordParseError as exc:
        raise UsageError(str(exc)) from None
    if not word.symbols:
        raise UsageError("--op must contain at least one generator")
    cfg = _config(args, args.n, args.offset)
    try:
        mat = operator_matrix(word, cfg)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(mat.to_csv())
    elif args.format == "json":
        out.write(mat.to_json() + "\n")
    else:
        for (row, col), c in mat.ordered_entries():
            out.write(f"|{row}> <- |{col}> : {c}\n")
    return 0


def random_partition(size: int, rng: random.Random) -> Partition:
    """A random partition of ``size`` built by repeatedly adding a random addable node."""
    from .partitions import addable_nodes
    lam = Partition()
    for _ in range(size):
        lam = lam.add(rng.choice(addable_nodes(lam)))
    return lam


def cmd_claims(args, out) -> int:
    rng = random.Random(args.seed)
    extra = [random_partition(args.sample_size, rng) for _ in range(args.sample)]
    try:
        reports = relcheck.check_claims(args.max, args.n, extra=extra)
    except (ValueError, CapExceeded) as exc:
        raise UsageError(str(exc)) from None
    _emit_reports(reports, args.format, out=out)
    return 0 if all(r.status is not relcheck.Status.FAIL for r in reports) else 1


COMMANDS = {
    "apply": cmd_apply,
    "verify": cmd_verify,
    "pairing": cmd_pairing,
    "char": cmd_char,
    "matrix": cmd_matrix,
    "claims": cmd_claims,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"rsfock {args.command}: {exc}\n")
        return 2


def run(argv: Sequence[str]):
    """``(exit_code, stdout, stderr)`` for in-process use and tests."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
