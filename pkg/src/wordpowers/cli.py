"""Command-line entry point.

Exit status: 0 on success, 1 when ``detect --expect`` (or a table row)
disagrees with the expectation, 2 on usage errors, 3 when a search or
enumeration stops at its cap before finishing.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import detectors, morphisms, numtheory, ramsey, search
from .words import WordError, parse_word, render_auto, render_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FAST_ROWS = "2:2,2:3,2:4,2:5,3:2,4:2"


class UsageError(Exception):
    pass


def _emit(doc: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _rows(text: str) -> List[tuple]:
    rows = []
    for item in text.split(","):
        try:
            r, k = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"bad row {item!r}, expected R:K") from None
        rows.append((r, k))
    return rows


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


# --------------------------------------------------------------------------
# subcommands


def cmd_detect(args) -> int:
    pattern = detectors.parse_pattern(args.pattern)
    word = parse_word(args.word)
    occ = detectors.find(word, pattern)
    doc = {
        "pattern": str(pattern),
        "word": render_auto(word),
        "found": occ is not None,
        "occurrence": None if occ is None else occ.to_dict(),
    }
    if occ is None:
        text = "avoids"
    else:
        fields = " ".join(f"{key}={value}" for key, value in occ.to_dict().items() if key != "kind")
        text = f"found {occ.kind}: {fields}"
    _emit(doc, text, args.json)
    if args.expect == "avoid":
        return EXIT_OK if occ is None else EXIT_MISMATCH
    if args.expect == "found":
        return EXIT_OK if occ is not None else EXIT_MISMATCH
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = search.SearchConfig(
        args.r, args.k, max_len=args.max_len, node_budget=args.budget,
        parallel_depth=args.parallel_depth if args.threads > 1 else 0,
        threads=args.threads, canonical=args.canonical,
    )
    result = search.longest_avoiding(cfg, progress=True)
    doc = result.to_dict()
    status = "complete" if result.complete else "incomplete (lower bound)"
    text = f"l({args.r},{args.k}) = {result.l}  {status}\nwitness: {doc['witness']}\nnodes: {result.nodes}"
    _emit(doc, text, args.json)
    return EXIT_OK if result.complete else EXIT_CAP


def cmd_table(args) -> int:
    rows = _rows(args.rows)
    table = search.reproduce_table(rows, budget=args.budget, canonical=args.canonical, progress=True)
    docs = [row.to_dict() for row in table]
    lines = []
    for d in docs:
        mark = {True: "match", False: "MISMATCH", None: "-"}[d["match"]]
        done = "" if d["complete"] else " (incomplete)"
        lines.append(f"{d['r']} {d['k']} {d['l']:>4} {d['witness']}  {mark}{done}")
    _emit({"rows": docs}, "\n".join(lines), args.json)
    if any(not d["complete"] for d in docs):
        return EXIT_CAP
    if any(d["match"] is False for d in docs):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        params, word = numtheory.construct_peng(args.prime)
    except numtheory.NotPrimeError as exc:
        raise UsageError(str(exc)) from None
    verified = None
    if args.verify:
        verified = detectors.find_congruential_power(word, 2, args.prime) is None
    doc = {"params": params.to_dict(), "word": render_word(word, "csv"), "verified": verified}
    lines = [
        f"p={params.p} g={params.g} c={params.c} a={params.a} length={params.word_len}",
        render_word(word, "csv"),
    ]
    if args.verify:
        lines.append("verify: " + ("pass (no congruential square)" if verified else "FAIL"))
    _emit(doc, "\n".join(lines), args.json)
    return EXIT_OK if verified in (None, True) else EXIT_MISMATCH


def cmd_morphism(args) -> int:
    if args.seed_file:
        m, seed = morphisms.parse_morphism(Path(args.seed_file).read_text())
        name = Path(args.seed_file).name
    elif args.name:
        m, seed, name = morphisms.BUILTIN_MORPHISMS[args.name], 0, args.name
    else:
        raise UsageError("give --name or --seed-file")
    word = morphisms.power(m, args.power, (seed,))
    if args.prefix is not None:
        word = word[: args.prefix]
    if args.coding:
        word = morphisms.apply_coding(morphisms.BUILTIN_CODINGS[args.coding], word)
        rendered = render_word(word, "csv")
    else:
        rendered = ",".join(m.name_of(a) for a in word)
    doc = {"morphism": name, "power": args.power, "length": len(word), "coding": args.coding, "word": rendered}
    _emit(doc, rendered, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.length is not None:
        if args.morphism != "psi":
            raise UsageError("--length verification is defined for --morphism psi")
        report = morphisms.verify_psi_prefix(args.length)
    elif args.zeta_lemma is not None:
        report = morphisms.verify_zeta_lemma(args.zeta_lemma)
    else:
        report = morphisms.verify_tau_phi_psi(args.tau_phi_psi)
    _emit(report.to_dict(), _report_text(report), args.json)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _report_text(report) -> str:
    lines = [f"{report.name}: {'pass' if report.passed else 'FAIL'}"]
    for check in report.checks:
        extra = " ".join(f"{k}={v}" for k, v in check.to_dict().items() if k not in ("name", "passed"))
        lines.append(f"  [{'ok' if check.passed else 'FAIL'}] {check.name} {extra}".rstrip())
    if report.note:
        lines.append(f"  note: {report.note}")
    return "\n".join(lines)


def cmd_ramsey(args) -> int:
    try:
        if args.quantity in ("omega", "w1"):
            fn = ramsey.omega if args.quantity == "omega" else ramsey.w1
            value = fn(args.t, args.k, args.cap, args.budget)
            doc = {"quantity": args.quantity, "t": args.t, "k": args.k, "cap": args.cap, "value": value}
            text = f"{args.quantity}({args.t},{args.k}) = {value}" if value is not None else \
                f"{args.quantity}({args.t},{args.k}) > {args.cap}"
            _emit(doc, text, args.json)
            return EXIT_OK if value is not None else EXIT_CAP
        report = ramsey.check_lemma_bounds(args.k, args.t, args.cap, args.budget)
    except ramsey.BudgetExceeded as exc:
        _emit({"error": str(exc)}, str(exc), args.json)
        return EXIT_CAP
    _emit(report.to_dict(), _report_text(report), args.json)
    if report.note:
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_MISMATCH


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordpowers", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="look for a pattern in a word")
    p.add_argument("--pattern", required=True,
                   help="square | abelian:R | sum-square | congruential:R:K | adjacent-equal-sum")
    p.add_argument("--word", required=True, help="compact digits (0102) or csv (0,1,-1)")
    p.add_argument("--expect", choices=["avoid", "found"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("search", help="longest word avoiding congruential r-powers mod k")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-len", type=_positive)
    p.add_argument("--budget", type=_positive, help="maximum number of letter placements")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--parallel-depth", type=_nonnegative, default=4)
    p.add_argument("--canonical", action="store_true",
                   help="fix the first letter to 0 and the first nonzero letter up to units mod k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="recompute rows of the l(r,k) table")
    p.add_argument("--rows", default=FAST_ROWS, help=f"comma-separated R:K pairs (default {FAST_ROWS})")
    p.add_argument("--budget", type=_positive)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="avoiding word of length p^2-p-1 for a prime p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("morphism", help="iterate a morphism")
    p.add_argument("--name", choices=sorted(morphisms.BUILTIN_MORPHISMS))
    p.add_argument("--seed-file", help="custom morphism, one 'letter -> image' rule per line")
    p.add_argument("--power", type=_nonnegative, required=True)
    p.add_argument("--prefix", type=_nonnegative)
    p.add_argument("--coding", choices=sorted(morphisms.BUILTIN_CODINGS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("verify", help="finite checks of the morphism identities and avoidance properties")
    p.add_argument("--morphism", choices=["psi"], default="psi")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--length", type=_positive)
    group.add_argument("--zeta-lemma", type=_nonnegative)
    group.add_argument("--tau-phi-psi", type=_nonnegative)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ramsey", help="brute-force Ramsey-type quantities")
    rsub = p.add_subparsers(dest="quantity", required=True)
    for name, help_text in (("omega", "interval-choice progression threshold"),
                            ("w1", "red progression or blue run threshold"),
                            ("check-bounds", "compare L(k,t) with omega(t+1, k//2) - 1")):
        q = rsub.add_parser(name, help=help_text)
        q.add_argument("--t", type=int, required=True)
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--cap", type=_positive, default=ramsey.DEFAULT_CAP)
        q.add_argument("--budget", type=_positive, default=ramsey.DEFAULT_BUDGET)
        q.add_argument("--json", action="store_true")
        q.set_defaults(func=cmd_ramsey)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, WordError, detectors.PatternError, search.SearchError,
            morphisms.MorphismError, ValueError, OSError) as exc:
        print(f"wordpowers: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
