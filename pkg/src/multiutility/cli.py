"""Command-line front end.

Verbs consume JSON files and emit deterministic JSON (or CSV for the lab
table): byte-identical output for identical inputs.  Errors leave a
machine-readable JSON object on stderr and a nonzero exit code.  With
--verify every emitted certificate is recomputed from scratch by plain
arithmetic before the output is written.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .cones import verify_membership
from .counterexample import anchor_membership, build_truncation, lab_table
from .jsonio import (
    SchemaError,
    dump_json,
    load_json,
    measure_to_json,
    parse_dataset,
    parse_measure,
    parse_query_pair,
    parse_space,
    parse_utility_set,
    rational_to_str,
    representation_to_json,
    verdict_to_json,
    _expect_dict,
    _expect_list,
)
from .measures import decompose, expectation
from .preferences import (
    PreferenceDataset,
    check_increasing,
    check_uniqueness,
    extract_representation,
    first_violation,
    monotone_extend,
    query,
    utilities_agree,
)


class UsageError(ValueError):
    """Command line is structurally wrong (missing inputs or flags)."""


class VerificationError(ValueError):
    """--verify recomputation failed; output withheld."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiutility",
        description="Exact multi-utility representations of lottery preferences.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, inputs: str | None) -> None:
        if inputs:
            p.add_argument("--input", action="append", default=[], metavar="PATH", help=inputs)
        p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
        p.add_argument("--pin", metavar="LABEL", help="outcome pinned to payoff zero (default: first outcome)")
        p.add_argument("--seed", type=int, default=0, help="reserved for sampling verbs; accepted everywhere")
        p.add_argument("--verify", action="store_true", help="recheck all emitted certificates arithmetically")

    p = sub.add_parser("represent", help="extract the utility set of a dataset")
    common(p, "dataset JSON")
    p = sub.add_parser("query", help="classify one lottery pair")
    common(p, "dataset JSON, then a {p, q} pair JSON")
    p = sub.add_parser("classify-batch", help="classify many pairs")
    common(p, "dataset JSON, then a {queries: [...]} JSON")
    p = sub.add_parser("equal-reps", help="do two utility sets represent the same preferences?")
    common(p, "two utility-set JSON files")
    p = sub.add_parser("monotone-check", help="extend by an outcome ranking and audit the utilities")
    common(p, "dataset JSON with a monotone section")
    p = sub.add_parser("decompose", help="split a zero-sum measure into scaled lotteries")
    common(p, "measure JSON: {outcomes, measure}")
    p = sub.add_parser("counterexample", help="emit the truncation lab table as CSV")
    common(p, None)
    p.add_argument("--n", type=int, required=True, metavar="N", help="largest truncation size")
    return parser


def _inputs(args, count: int) -> list:
    paths = getattr(args, "input", [])
    if len(paths) != count:
        noun = "input file" if count == 1 else "input files"
        raise UsageError(f"{args.verb} needs exactly {count} {noun} via --input, got {len(paths)}")
    return [load_json(p) for p in paths]


def _dataset_and_pin(args, raw) -> tuple[PreferenceDataset, str, object]:
    dataset, ranking = parse_dataset(raw)
    pin = args.pin if args.pin is not None else dataset.space.outcomes[0]
    if pin not in dataset.space:
        raise UsageError(f"--pin {pin!r} is not an outcome of the dataset")
    return dataset, pin, ranking


def _verify_representation(rep, dataset: PreferenceDataset) -> None:
    if not rep.utilities:
        raise VerificationError("representation has no utilities")
    for u in rep.utilities:
        if u.value(rep.pin) != 0:
            raise VerificationError(f"utility {u!r} not pinned to zero at {rep.pin!r}")
    for p, q in dataset.statements:
        for u in rep.utilities:
            if expectation(p, u) < expectation(q, u):
                raise VerificationError(
                    f"statement {p!r} over {q!r} violated by extracted utility {u!r}"
                )


def _verify_verdict(rep, p, q, verdict) -> None:
    diff = (p - q).dense()
    neg = [-v for v in diff]
    if not verify_membership(rep.cone, diff, verdict.forward):
        raise VerificationError("forward certificate failed recheck")
    if not verify_membership(rep.cone, neg, verdict.backward):
        raise VerificationError("backward certificate failed recheck")
    if utilities_agree(rep, p, q) != verdict.classification:
        raise VerificationError("utility-by-utility classification disagrees with cone verdict")


def _run(args) -> str:
    verb = args.verb

    if verb == "represent":
        (raw,) = _inputs(args, 1)
        dataset, pin, _ = _dataset_and_pin(args, raw)
        rep = extract_representation(dataset, pin)
        if args.verify:
            _verify_representation(rep, dataset)
        return dump_json(representation_to_json(rep))

    if verb == "query":
        raw_dataset, raw_pair = _inputs(args, 2)
        dataset, pin, _ = _dataset_and_pin(args, raw_dataset)
        p, q = parse_query_pair(raw_pair, dataset.space)
        rep = extract_representation(dataset, pin)
        verdict = query(rep, p, q)
        if args.verify:
            _verify_verdict(rep, p, q, verdict)
        return dump_json(verdict_to_json(verdict))

    if verb == "classify-batch":
        raw_dataset, raw_batch = _inputs(args, 2)
        dataset, pin, _ = _dataset_and_pin(args, raw_dataset)
        root = _expect_dict(raw_batch, "")
        if "queries" not in root:
            raise SchemaError("missing key", "queries")
        pairs = [
            parse_query_pair(item, dataset.space, f"queries[{i}]")
            for i, item in enumerate(_expect_list(root["queries"], "queries"))
        ]
        rep = extract_representation(dataset, pin)
        verdicts = [query(rep, p, q) for p, q in pairs]
        if args.verify:
            for (p, q), v in zip(pairs, verdicts):
                _verify_verdict(rep, p, q, v)
        return dump_json({"verdicts": [verdict_to_json(v) for v in verdicts]})

    if verb == "equal-reps":
        raw_a, raw_b = _inputs(args, 2)
        space_a, set_a = parse_utility_set(raw_a)
        space_b, set_b = parse_utility_set(raw_b)
        if space_a != space_b:
            raise SchemaError("utility sets must share one outcome list", "outcomes")
        return dump_json({"equal": check_uniqueness(set_a, set_b)})

    if verb == "monotone-check":
        (raw,) = _inputs(args, 1)
        dataset, pin, ranking = _dataset_and_pin(args, raw)
        if ranking is None:
            raise SchemaError("missing key", "monotone")
        extended = monotone_extend(dataset, ranking)
        rep = extract_representation(extended, pin)
        if args.verify:
            _verify_representation(rep, extended)
        violations = []
        for u in rep.utilities:
            if not check_increasing(u, ranking):
                pair = first_violation(u, ranking)
                violations.append(
                    {"utility": [rational_to_str(v) for v in u.values], "pair": list(pair)}
                )
        return dump_json({"all_increasing": not violations, "violations": violations})

    if verb == "decompose":
        (raw,) = _inputs(args, 1)
        root = _expect_dict(raw, "")
        for key in ("outcomes", "measure"):
            if key not in root:
                raise SchemaError("missing key", key)
        space = parse_space(root["outcomes"])
        x = parse_measure(root["measure"], space, "measure")
        split = decompose(x)
        if args.verify:
            recombined = split.plus.measure.scale(split.alpha) - split.minus.measure.scale(split.alpha)
            if not (x.is_zero() and split.alpha == 0) and recombined != x:
                raise VerificationError("decomposition does not recombine to the input")
        return dump_json(
            {
                "alpha": rational_to_str(split.alpha),
                "p": measure_to_json(split.plus),
                "q": measure_to_json(split.minus),
            }
        )

    if verb == "counterexample":
        rows = lab_table(args.n)
        if args.verify:
            prev = Fraction(-1)
            for n, _count, verdict, cost in rows:
                trunc = build_truncation(n)
                cert = anchor_membership(trunc)
                cone_ok = verdict == cert.verdict == "OUT"
                if not cone_ok:
                    raise VerificationError(f"anchor verdict at n={n} failed recheck")
                if n >= 2 and not cost > n - 2:
                    raise VerificationError(f"separation cost at n={n} violates its growth bound")
                if cost < prev:
                    raise VerificationError(f"separation cost decreased at n={n}")
                prev = cost
        lines = ["n,generators,anchor,cost"]
        for n, count, verdict, cost in rows:
            lines.append(f"{n},{count},{verdict},{rational_to_str(cost)}")
        return "\n".join(lines) + "\n"

    raise UsageError(f"unknown verb {verb!r}")


def _emit_error(kind: str, message: str, **extra) -> None:
    body = {"kind": kind, "message": message}
    for k, v in extra.items():
        if v is not None:
            body[k] = v
    sys.stderr.write(dump_json({"error": body}))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = _run(args)
    except UsageError as exc:
        _emit_error("usage", str(exc))
        return 2
    except SchemaError as exc:
        kind = "parse" if exc.line is not None else "schema"
        _emit_error(kind, exc.message, path=exc.path or None, line=exc.line, column=exc.column)
        return 1
    except VerificationError as exc:
        _emit_error("verify", str(exc))
        return 1
    except ValueError as exc:
        _emit_error("validation", str(exc))
        return 1
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            _emit_error("io", f"cannot write {args.output}: {exc.strerror or exc}")
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
