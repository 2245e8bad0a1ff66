"""Command-line interface.

Subcommands: normalize, candidates, train-lm, eval, dump-fst.
Exit codes: 0 success, 1 usage error, 2 data error, 3 scorer transport
error (only with --no-fallback; otherwise scorer failures fall back to the
deterministic output and exit 0 with a warning on stderr).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .candidates import PruneConfig, build_lattice, generate
from .errors import DataFormatError, ScorerError
from .evaluation import evaluate, load_equiv_rules, load_google_tn
from .fst import Weight
from .grammars import GrammarSet
from .normalizer import TextNormalizer
from .scoring import train_ngram


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusenorm",
        description="WFST text normalization with language-model rescoring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("normalize", help="normalize sentences, one per line")
    norm.add_argument("--input", default="-", help="input file, - for stdin")
    norm.add_argument("--output", default="-", help="output file, - for stdout")
    norm.add_argument("--grammar-dir", default=None)
    norm.add_argument("--scorer", choices=["det", "ngram", "remote"], default="det")
    norm.add_argument("--lm-path", default=None, help="FNLM1 model for --scorer ngram")
    norm.add_argument("--endpoint", default=None, help="service URL for --scorer remote")
    norm.add_argument("--delta", type=float, default=0.2)
    norm.add_argument("--max-candidates", type=int, default=64)
    norm.add_argument("--jobs", type=int, default=None)
    norm.add_argument(
        "--no-fallback",
        action="store_true",
        help="fail (exit 3) instead of falling back to deterministic output",
    )

    cand = sub.add_parser("candidates", help="debug table of candidates for one sentence")
    cand.add_argument("--text", required=True)
    cand.add_argument("--grammar-dir", default=None)
    cand.add_argument("--delta", type=float, default=0.2)
    cand.add_argument("--max-rows", type=int, default=256)

    train = sub.add_parser("train-lm", help="train the built-in n-gram model")
    train.add_argument("--corpus", required=True, help="normalized text, one line each")
    train.add_argument("--order", type=int, default=3)
    train.add_argument("--out", required=True)

    ev = sub.add_parser("eval", help="sentence accuracy with equivalence relaxation")
    ev.add_argument("--hyp", default=None, help="hypothesis file, one sentence per line")
    ev.add_argument("--ref", default=None, help="reference file, one sentence per line")
    ev.add_argument("--dataset", choices=["google-tn"], default=None)
    ev.add_argument("--path", default=None, help="dataset file for --dataset")
    ev.add_argument("--equiv-rules", default=None)
    ev.add_argument("--json", action="store_true")
    ev.add_argument("--grammar-dir", default=None)
    ev.add_argument("--scorer", choices=["det", "ngram", "remote"], default="det")
    ev.add_argument("--lm-path", default=None)
    ev.add_argument("--endpoint", default=None)

    dump = sub.add_parser("dump-fst", help="print the sentence lattice, one arc per line")
    dump.add_argument("--text", required=True)
    dump.add_argument("--grammar-dir", default=None)

    return parser


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return [line.rstrip("\n") for line in sys.stdin]
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataFormatError(str(e), path=path)


def _write_lines(path: str, lines) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_normalize(args) -> int:
    normalizer = TextNormalizer(
        scorer=args.scorer,
        grammar_dir=args.grammar_dir,
        lm_path=args.lm_path,
        endpoint=args.endpoint,
        delta=args.delta,
        max_candidates=args.max_candidates,
        fallback=not args.no_fallback,
        jobs=args.jobs,
    )
    if args.scorer == "ngram" and not args.lm_path:
        raise DataFormatError("--scorer ngram needs --lm-path (train one with train-lm)")
    if args.scorer == "remote" and not args.endpoint:
        raise SystemExit(2)
    normalizer.fit()
    sentences = _read_lines(args.input)
    _write_lines(args.output, normalizer.transform(sentences))
    return 0


def _cmd_candidates(args) -> int:
    grammar = GrammarSet(args.grammar_dir) if args.grammar_dir else GrammarSet.default()
    lattice = build_lattice(args.text, grammar)
    everything = generate(
        lattice, PruneConfig(delta=Weight.of(10**6), max_candidates=args.max_rows)
    )
    bound = everything[0].weight.ticks + Weight.of(args.delta).ticks
    print(f"{'flag':<7} {'W_s':>10}  {'spans':<40} text")
    for cand in everything:
        flag = "kept" if cand.weight.ticks <= bound else "pruned"
        spans = "; ".join(
            f"{c.cls}={' '.join(c.spoken)}" for c in cand.span_outputs if c.is_semiotic
        )
        print(f"{flag:<7} {cand.weight.value:>10.4f}  {spans:<40} {cand.text}")
    return 0


def _cmd_train_lm(args) -> int:
    lines = _read_lines(args.corpus)
    model = train_ngram(lines, order=args.order)
    model.save(args.out)
    print(f"trained order-{args.order} model on {len(lines)} lines -> {args.out}")
    return 0


def _cmd_eval(args) -> int:
    rules = load_equiv_rules(args.equiv_rules)
    if args.dataset == "google-tn":
        if not args.path:
            raise SystemExit(2)
        examples = load_google_tn(args.path)
        refs = [e.spoken for e in examples]
        writtens = [e.written for e in examples]
        normalizer = TextNormalizer(
            scorer=args.scorer,
            grammar_dir=args.grammar_dir,
            lm_path=args.lm_path,
            endpoint=args.endpoint,
        )
        normalizer.fit()
        hyps = normalizer.transform(writtens)
    else:
        if not args.hyp or not args.ref:
            raise SystemExit(2)
        hyps = _read_lines(args.hyp)
        refs = _read_lines(args.ref)
        writtens = None
    report = evaluate(hyps, refs, rules, writtens=writtens)
    print(report.to_json() if args.json else report.format_table())
    return 0


def _cmd_dump_fst(args) -> int:
    grammar = GrammarSet(args.grammar_dir) if args.grammar_dir else GrammarSet.default()
    lattice = build_lattice(args.text, grammar)
    sys.stdout.write(lattice.transducer.dump())
    return 0


_COMMANDS = {
    "normalize": _cmd_normalize,
    "candidates": _cmd_candidates,
    "train-lm": _cmd_train_lm,
    "eval": _cmd_eval,
    "dump-fst": _cmd_dump_fst,
}


def cli_main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as e:
        return 1 if e.code else 0
    except ScorerError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except DataFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
