"""Command-line front end.

Commands: enumerate, ai, classify, convert, sets, verify, weights.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.
Identical invocations (same flags, same seed) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .enumeration import MaxAiRecord, enumerate_all, weight_catalog
from .orders import bset, partition
from .symfun import (
    CapacityError,
    SanfVec,
    SymFn,
    hamming_weight,
    sanf_to_svv,
    svv_to_sanf,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _read_value(raw: str) -> str:
    """A literal bitstring, or '-' to read one line from stdin."""
    if raw == "-":
        raw = sys.stdin.readline().strip()
    return raw


def _parse_svv(raw: str) -> SymFn:
    s = _read_value(raw)
    if len(s) < 2 or not set(s) <= {"0", "1"}:
        raise ValueError(f"malformed value vector {s!r}")
    return SymFn.from_string(s)


def _parse_sanf(raw: str) -> SanfVec:
    s = _read_value(raw)
    if len(s) < 2 or not set(s) <= {"0", "1"}:
        raise ValueError(f"malformed coefficient vector {s!r}")
    return SanfVec.from_string(s)


def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_fields(r: MaxAiRecord) -> dict:
    return {
        "n": r.f.n,
        "case": r.case,
        "p0": r.p0,
        "params": "".join(str(b) for b in r.params),
        "triple": "".join(str(b) for b in r.triple) if r.triple else None,
        "svv": r.svv,
        "weight": hamming_weight(r.f),
    }


def _records_text(records: list[MaxAiRecord], n: int) -> str:
    lines = [f"f\tSVV: v(0)..v({n})\tcase\tweight"]
    for i, r in enumerate(records, 1):
        lines.append(f"{i}\t{r.svv}\t{r.case}\t{hamming_weight(r.f)}")
    return "\n".join(lines) + "\n"


def _records_csv(records: list[MaxAiRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "case", "p0", "params", "triple", "svv", "weight"])
    for r in records:
        d = _record_fields(r)
        writer.writerow([
            d["n"], d["case"],
            "" if d["p0"] is None else d["p0"],
            d["params"],
            d["triple"] or "",
            d["svv"], d["weight"],
        ])
    return buf.getvalue()


def _records_json(records: list[MaxAiRecord]) -> str:
    return json.dumps([_record_fields(r) for r in records], indent=2) + "\n"


def cmd_enumerate(args) -> int:
    if args.n % 2 or args.n < 2:
        print(f"error: n must be a positive even integer, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    records = enumerate_all(args.n)
    if args.format == "csv":
        _emit(_records_csv(records), args)
    elif args.format == "json":
        _emit(_records_json(records), args)
    else:
        _emit(_records_text(records, args.n), args)
    return EXIT_OK


def _render_monomials(masks: tuple[int, ...]) -> str:
    terms = []
    for m in masks:
        if m == 0:
            terms.append("1")
        else:
            terms.append("".join(f"x{i + 1}" for i in range(m.bit_length()) if (m >> i) & 1))
    return " + ".join(terms)


def cmd_ai(args) -> int:
    from .ai import ai_exact
    from .symfun import to_truth_table

    f = _parse_svv(args.svv)
    report = ai_exact(to_truth_table(f))
    out = (
        f"AI = {report.ai}\n"
        f"side = {report.witness_side}\n"
        f"annihilator = {_render_monomials(report.witness_monomials)}\n"
    )
    _emit(out, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .enumeration import classify

    f = _parse_svv(args.svv)
    if f.n % 2:
        print("error: classification needs an even number of variables", file=sys.stderr)
        return EXIT_USAGE
    record = classify(f)
    if record is None:
        _emit("not max-AI\n", args)
    else:
        d = _record_fields(record)
        _emit(
            "case={case} p0={p0} params={params} triple={triple} svv={svv} weight={weight}\n".format(
                case=d["case"],
                p0="-" if d["p0"] is None else d["p0"],
                params=d["params"],
                triple=d["triple"] or "-",
                svv=d["svv"],
                weight=d["weight"],
            ),
            args,
        )
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.svv is not None:
        f = _parse_svv(args.svv)
        _emit(svv_to_sanf(f).to_string() + "\n", args)
    else:
        l = _parse_sanf(args.sanf)
        _emit(sanf_to_svv(l).to_string() + "\n", args)
    return EXIT_OK


def cmd_sets(args) -> int:
    if args.n % 2 or args.n < 2:
        print(f"error: n must be a positive even integer, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    k = args.n // 2
    fam = partition(k)
    lines = [f"n = {args.n}, k = {k}"]
    for i, cell in enumerate(fam.sets):
        lines.append(f"A_{i} = {{{', '.join(map(str, cell))}}}")
    lines.append(f"B = {{{', '.join(map(str, bset(k)))}}}")
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_weights(args) -> int:
    if args.n % 2 or args.n < 2:
        print(f"error: n must be a positive even integer, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    catalog = weight_catalog(args.n)
    rows = sorted(catalog.entries.items())
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "params"])
        for w, ps in rows:
            writer.writerow([w, " ".join("base" if p is None else f"i={p}" for p in ps)])
        _emit(buf.getvalue(), args)
    elif args.format == "json":
        payload = {
            "n": args.n,
            "weights": [{"weight": w, "params": list(ps)} for w, ps in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        lines = [f"n = {args.n}"]
        for w, ps in rows:
            lines.append(f"{w}\t{', '.join('base' if p is None else f'i={p}' for p in ps)}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import (
        EXHAUSTIVE_LIMIT,
        SAMPLE_LIMIT,
        exhaustive_check,
        sampled_check,
    )

    lines = []
    failed = False
    for n in args.n:
        if n % 2 or n < 2:
            print(f"error: n must be a positive even integer, got {n}", file=sys.stderr)
            return EXIT_USAGE
        if args.exhaustive:
            if n > EXHAUSTIVE_LIMIT:
                print(f"error: --exhaustive is limited to n <= {EXHAUSTIVE_LIMIT}", file=sys.stderr)
                return EXIT_USAGE
            res = exhaustive_check(n, jobs=args.jobs)
            if res.ok:
                lines.append(f"{res.enumerated}/{res.total} max-AI, sets equal")
            else:
                failed = True
                lines.append(
                    f"{res.oracle_accepted}/{res.total} max-AI by oracle, "
                    f"sets differ; first counterexample svv={res.mismatches[0]}"
                )
        else:
            if n > SAMPLE_LIMIT:
                print(f"error: sampled verify is limited to n <= {SAMPLE_LIMIT}", file=sys.stderr)
                return EXIT_USAGE
            res = sampled_check(n, sample=args.sample, seed=args.seed, jobs=args.jobs)
            if res.ok:
                lines.append(
                    f"{res.enumerated} enumerated all AI={n // 2}; "
                    f"{res.sampled} sampled non-enumerated all AI<{n // 2}"
                )
            else:
                failed = True
                lines.append(f"FAIL: {res.failures[0]}")
    _emit("\n".join(lines) + "\n", args)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxai",
        description="Even-variable symmetric Boolean functions with maximum algebraic immunity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every maximum-immunity function for n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("ai", help="exact algebraic immunity of a value vector")
    p.add_argument("--svv", required=True, help="bitstring, v(0) first; '-' reads stdin")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ai)

    p = sub.add_parser("classify", help="match a value vector against the catalog")
    p.add_argument("--svv", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("convert", help="convert between value and coefficient vectors")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--svv")
    group.add_argument("--sanf")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("sets", help="print the cell family and exempt set for n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sets)

    p = sub.add_parser("weights", help="closed-form weight catalog for n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", help="cross-check the catalog against the oracle")
    p.add_argument("-n", type=int, nargs="+", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
