"""Command-line front end: table dumps, single-value queries, classification
runs, and the reference verification command.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
All values are rendered exactly; nothing is ever printed as a float.
"""

import argparse
import json
import sys

from . import classify, sn_chars, spin_chars
from .an_chars import AnCharLabel, an_character_table, an_classes, an_value
from .partitions import parse_partition
from .sn_chars import character_table, mn_value
from .spin_chars import (
    AnSpinLabel,
    SpinLabel,
    an_spin_character_table,
    an_spin_value,
    check_strict,
    schur_value,
    spin_character_table,
)

GROUPS = classify.GROUPS
VARIANT_NAMES = {"+": "plus", "-": "minus", "down": "down", "self": "self"}


def _parse_n_range(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_primes(text: str) -> list[int]:
    ps = [int(tok) for tok in text.split(",")]
    for p in ps:
        if not classify.is_prime(p):
            raise ValueError(f"{p} is not prime")
    return ps


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _table_text(table) -> str:
    cols = [["label", *table.row_labels]]
    for j, name in enumerate(table.col_labels):
        cols.append([name, *[str(row[j]) for row in table.values]])
    widths = [max(len(cell) for cell in col) for col in cols]
    lines = []
    for i in range(len(table.row_labels) + 1):
        lines.append(
            "  ".join(col[i].rjust(w) for col, w in zip(cols, widths))
        )
    return "\n".join(lines) + "\n"


def _build_table(group: str, n: int):
    if group == "sn":
        return character_table(n)
    if group == "an":
        return an_character_table(n)
    if group == "sn-tilde-spin":
        return spin_character_table(n)
    return an_spin_character_table(n)


def _cmd_table(args) -> int:
    table = _build_table(args.group, args.n)
    if args.format == "csv":
        _emit(table.to_csv(), args.output)
    elif args.format == "json":
        _emit(table.to_json(), args.output)
    else:
        _emit(_table_text(table), args.output)
    return 0


def _parse_an_class(n: int, text: str):
    tag = "plain"
    if text.endswith("+"):
        tag, text = "plus", text[:-1]
    elif text.endswith("-"):
        tag, text = "minus", text[:-1]
    alpha = parse_partition(text)
    for cls in an_classes(n):
        if cls.alpha == alpha and cls.tag == tag:
            return cls
    raise ValueError(f"no A_{n} class {text}{'' if tag == 'plain' else tag}")


def _cmd_value(args) -> int:
    lam = parse_partition(args.lam)
    if sum(lam) != args.n:
        raise ValueError(f"lambda {args.lam} is not a partition of {args.n}")
    variant = VARIANT_NAMES.get(args.variant, args.variant)
    if args.group == "sn":
        alpha = parse_partition(args.cls)
        value = str(mn_value(lam, alpha))
    elif args.group == "an":
        cls = _parse_an_class(args.n, args.cls)
        value = str(an_value(AnCharLabel(lam, variant), cls))
    elif args.group == "sn-tilde-spin":
        alpha = parse_partition(args.cls)
        value = str(schur_value(SpinLabel(check_strict(lam), variant), alpha))
    else:
        alpha = parse_partition(args.cls)
        sign = -1 if args.delta_sign == "-" else 1
        value = str(
            an_spin_value(AnSpinLabel(check_strict(lam), variant), alpha, sign)
        )
    _emit(value, args.output)
    return 0


def _cmd_classify(args) -> int:
    reports = []
    for n in _parse_n_range(args.n):
        primes = (
            _parse_primes(args.p)
            if args.p
            else list(classify.primes_upto(n))
        )
        for p in primes:
            if args.p is None and classify.p_part_exponent(args.group, n, p) < 1:
                continue
            reports.append(classify.classify_group(args.group, n, p, args.threads))
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports]), args.output)
    elif args.format == "csv":
        chunks = [reports[0].to_csv()]
        for r in reports[1:]:
            chunks.append("".join(r.to_csv().splitlines(True)[1:]))
        _emit("".join(chunks), args.output)
    else:
        lines = []
        for r in reports:
            lines.append(f"# group={r.group} n={r.n} p={r.p}")
            for h in r.hits:
                lines.append(f"hit {h.label} dim={h.dim} weak={h.weak}")
            for w in r.witnesses:
                lines.append(f"witness {w.label} zero-at={w.cls}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    result = classify.verify_reference(args.max_n, workers=args.threads)
    if args.format == "json":
        _emit(result.to_json(), args.output)
    else:
        status = "PASS" if result.passed else "FAIL"
        lines = [
            f"{status}: swept {result.cells} (group, n, p) cells up to n={result.max_n};"
            f" {len(result.diffs)} diffs"
        ]
        lines.extend(result.diffs)
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstein",
        description="Exact character values of S_n, A_n and their double "
        "covers, and exhaustive quasi p-Steinberg classification.",
    )
    parser.add_argument(
        "--cache-size",
        type=int,
        default=None,
        metavar="N",
        help="bound for the shared recursion caches (default from "
        "QSTEIN_CACHE_SIZE, else 1000000)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print a full character table")
    p_table.add_argument("--group", choices=GROUPS, required=True)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_table.add_argument("--output", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_value = sub.add_parser("value", help="evaluate one (label, class) pair")
    p_value.add_argument("--group", choices=GROUPS, required=True)
    p_value.add_argument("--n", type=int, required=True)
    p_value.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p_value.add_argument(
        "--variant",
        default="down",
        choices=("down", "+", "-", "self"),
        help="character variant for an / spin groups",
    )
    p_value.add_argument("--class", dest="cls", required=True, metavar="CLASS")
    p_value.add_argument(
        "--delta-sign",
        choices=("+", "-"),
        default="+",
        help="branch of the diagonal correction (an-tilde-spin only)",
    )
    p_value.add_argument("--output", default=None)
    p_value.set_defaults(func=_cmd_value)

    p_cls = sub.add_parser("classify", help="quasi p-Steinberg search")
    p_cls.add_argument("--group", choices=GROUPS, required=True)
    p_cls.add_argument("--n", required=True, metavar="N[-M]")
    p_cls.add_argument("--p", default=None, metavar="P[,P...]",
                       help="primes to sweep (default: all valid p <= n)")
    p_cls.add_argument("--threads", type=int, default=1)
    p_cls.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_cls.add_argument("--output", default=None)
    p_cls.set_defaults(func=_cmd_classify)

    p_ver = sub.add_parser(
        "verify-paper",
        help="re-run all classifications and diff them against the expected "
        "reference tables",
    )
    p_ver.add_argument("--max-n", type=int, default=classify.DEFAULT_MAX_N)
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--output", default=None)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_size is not None:
        sn_chars.configure_cache(args.cache_size)
        spin_chars.configure_cache(args.cache_size)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
