"""Batch command-line front end.

Subcommands wire the pipeline end to end: import-wordnet, filter,
transfer, compose, split, stats, hamming, and score.  Per-sentence
inapplicability is never fatal; every run that writes outputs also
writes a manifest sufficient to reproduce them.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import corpus_stats, difficulty_report
from .composition import (
    NoApplicableTransferError,
    compose_grid,
    emit_dataset,
    get_dimension,
    parse_pair_line,
)
from .errors import Inapplicable
from .lexicon import (
    Lexicon,
    LexiconError,
    build_frequency,
    dump_frequency,
    import_wordnet,
    load_frequency,
    load_lexicon,
)
from .metrics import bleu, rouge_l, score_report
from .registry import TRANSFERS, get_transfer
from .treebank import (
    Sentence,
    extract_sentence,
    filter_corpus,
    iter_corpus,
    normalize_tree,
    write_corpus,
)

LEXICON_ENV_VAR = "FINESTYLE_LEXICON"


def _read_trees(path: str):
    return list(iter_corpus(Path(path).read_text(encoding="utf-8")))


def _load_lexicon_from(args: argparse.Namespace) -> Lexicon:
    path = args.lexicon or os.environ.get(LEXICON_ENV_VAR)
    if not path:
        raise SystemExit(
            f"no lexicon given: pass --lexicon or set {LEXICON_ENV_VAR}"
        )
    lexicon = load_lexicon(path)
    if getattr(args, "frequency", None):
        lexicon.frequency = load_frequency(args.frequency)
    return lexicon


def _write_manifest(out_dir: Path, command: str, config: dict) -> None:
    payload = json.dumps(config, sort_keys=True)
    manifest = {
        "tool": "finestyle",
        "version": __version__,
        "command": command,
        "config": config,
        "config_sha256": hashlib.sha256(payload.encode("utf-8")).hexdigest(),
    }
    (out_dir / "run_manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )


def cmd_import_wordnet(args: argparse.Namespace) -> int:
    lexicon = import_wordnet(args.wordnet_dir, output_path=args.out)
    n_syn = sum(len(v) for v in lexicon.synonyms.values())
    n_ant = sum(len(v) for v in lexicon.antonyms.values())
    print(f"wrote {args.out}: {n_syn} synonym and {n_ant} antonym records")
    return 0


def cmd_filter(args: argparse.Namespace) -> int:
    trees = [normalize_tree(t) for t in _read_trees(args.trees)]
    kept = filter_corpus(trees)
    out = Path(args.out)
    out.write_text(write_corpus(kept), encoding="utf-8")
    if args.sentences_out:
        lines = "".join(extract_sentence(t).text + "\n" for t in kept)
        Path(args.sentences_out).write_text(lines, encoding="utf-8")
    print(f"kept {len(kept)} of {len(trees)} sentences")
    return 0


def cmd_transfer(args: argparse.Namespace) -> int:
    transfer = get_transfer(args.style)
    lexicon = _load_lexicon_from(args) if transfer.needs_lexicon else None
    trees = [normalize_tree(t) for t in _read_trees(args.trees)]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    pair_lines: list[str] = []
    replacement_lines: list[str] = []
    deletion_lines: list[str] = []
    applicable = 0
    for i, tree in enumerate(trees):
        source = extract_sentence(tree, source_id=str(i))
        try:
            result = transfer.apply(tree, lexicon)
        except Inapplicable:
            continue
        applicable += 1
        target = result.sentence(source_id=str(i))
        pair_lines.append(f"{source.text}\t{target.text}")
        for rep in result.replacements:
            replacement_lines.append(
                f"{i}\t{rep.token_index}\t{rep.original}\t{rep.substitute}\t{rep.relation}"
            )
        for deletion in result.deletions:
            deletion_lines.append(
                f"{i}\t{deletion.span_start}\t{deletion.span_end}\t{deletion.node_label}"
            )

    (out_dir / "pairs.tsv").write_text(
        "".join(line + "\n" for line in pair_lines), encoding="utf-8"
    )
    if replacement_lines:
        (out_dir / "replacements.tsv").write_text(
            "".join(line + "\n" for line in replacement_lines), encoding="utf-8"
        )
    if deletion_lines:
        (out_dir / "deletions.tsv").write_text(
            "".join(line + "\n" for line in deletion_lines), encoding="utf-8"
        )
    _write_manifest(
        out_dir,
        "transfer",
        {"style": args.style, "trees": str(args.trees), "n_input": len(trees)},
    )
    print(
        f"{args.style}: {applicable} applicable, {len(trees) - applicable} inapplicable"
    )
    return 0


def cmd_compose(args: argparse.Namespace) -> int:
    dim_names = [name.strip() for name in args.dims.split(",") if name.strip()]
    if not dim_names:
        raise SystemExit("at least one dimension is required")
    dims = [get_dimension(name) for name in dim_names]
    trees = [normalize_tree(t) for t in _read_trees(args.trees)]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    all_pairs = []
    skipped = 0
    for i, tree in enumerate(trees):
        try:
            all_pairs.extend(
                compose_grid(
                    tree, dims, include_identity=args.identity_pairs, source_id=str(i)
                )
            )
        except (NoApplicableTransferError, Inapplicable):
            skipped += 1  # per-sentence skips are not fatal
    if not all_pairs:
        print("warning: no composable sentences", file=sys.stderr)
    result = emit_dataset(all_pairs, out_dir, seed=args.seed) if all_pairs else None
    _write_manifest(
        out_dir,
        "compose",
        {
            "dims": dim_names,
            "identity_pairs": bool(args.identity_pairs),
            "seed": args.seed,
            "n_input": len(trees),
            "n_skipped": skipped,
        },
    )
    if result:
        print(
            f"pairs: {sum(result.counts)} "
            f"(train/valid/test = {result.counts[0]}/{result.counts[1]}/{result.counts[2]}), "
            f"{skipped} sentences skipped"
        )
    return 0


def cmd_split(args: argparse.Namespace) -> int:
    ratios = tuple(float(r) for r in args.ratios.split(","))
    if len(ratios) != 3:
        raise SystemExit("--ratios needs three comma-separated numbers")
    dim_names = [name.strip() for name in args.dims.split(",")]
    lines = Path(args.pairs).read_text(encoding="utf-8").splitlines()
    pairs = [parse_pair_line(line, dim_names) for line in lines if line.strip()]
    result = emit_dataset(pairs, args.out, ratios=ratios, seed=args.seed)
    print(
        f"train/valid/test = {result.counts[0]}/{result.counts[1]}/{result.counts[2]} "
        f"(seed {result.seed})"
    )
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    trees = [normalize_tree(t) for t in _read_trees(args.trees)]
    sentences = [extract_sentence(t) for t in trees]
    stats = corpus_stats(sentences, trees=trees, top_k=args.top_k)
    print(json.dumps(stats.to_json(), indent=2))
    if args.histogram_csv:
        rows = "".join(
            f"{length},{count}\n"
            for length, count in sorted(stats.length_histogram.items())
        )
        Path(args.histogram_csv).write_text("length,count\n" + rows, encoding="utf-8")
    if args.frequency_out:
        Path(args.frequency_out).write_text(
            dump_frequency(build_frequency(sentences)), encoding="utf-8"
        )
    return 0


def cmd_hamming(args: argparse.Namespace) -> int:
    lines = Path(args.pairs).read_text(encoding="utf-8").splitlines()
    pairs = []
    for line in lines:
        if not line.strip():
            continue
        fields = line.rstrip("\n").split("\t")
        source, target = fields[-2], fields[-1]
        pairs.append(
            (
                Sentence(tokens=tuple(source.split())),
                Sentence(tokens=tuple(target.split())),
            )
        )
    report = difficulty_report(args.name, pairs)
    print(json.dumps(report.to_json()))
    return 0


def cmd_score(args: argparse.Namespace) -> int:
    def read_sentences(path: str) -> list[Sentence]:
        return [
            Sentence(tokens=tuple(line.split()))
            for line in Path(path).read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]

    candidates = read_sentences(args.candidates)
    references = read_sentences(args.references)
    if args.metric == "bleu":
        for n in range(1, 5):
            print(f"BLEU-{n}\t{bleu(candidates, references, max_n=n):.4f}")
    elif args.metric == "rougeL":
        print(f"ROUGE-L\t{rouge_l(candidates, references):.4f}")
    else:
        report = score_report(candidates, references)
        print(
            "BLEU-1\tBLEU-2\tBLEU-3\tBLEU-4\tROUGE-L\n"
            + "\t".join(f"{b:.4f}" for b in report.bleu)
            + f"\t{report.rouge_l:.4f}"
        )
        if report.zero_ngram_orders:
            print(
                f"warning: zero n-gram matches at orders {report.zero_ngram_orders}",
                file=sys.stderr,
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finestyle",
        description="Rule-based fine-grained style transfer over constituency trees.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import-wordnet", help="convert a WordNet 3.0 database directory")
    p.add_argument("--wordnet-dir", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_import_wordnet)

    p = sub.add_parser("filter", help="normalize and length/completeness-filter trees")
    p.add_argument("--trees", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--sentences-out")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("transfer", help="apply one named transfer to a corpus")
    p.add_argument("--style", required=True, choices=sorted(TRANSFERS))
    p.add_argument("--trees", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon", help=f"native lexicon TSV (default ${LEXICON_ENV_VAR})")
    p.add_argument("--frequency", help="lemma frequency TSV")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("compose", help="generate labeled compositional pairs")
    p.add_argument("--dims", required=True, help="comma-separated dimension names")
    p.add_argument("--trees", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--identity-pairs", action="store_true")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("split", help="shuffle and split a labeled pair file")
    p.add_argument("--pairs", required=True)
    p.add_argument("--dims", required=True)
    p.add_argument("--ratios", default="0.9,0.05,0.05")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--trees", required=True)
    p.add_argument("--top-k", type=int, default=10)
    p.add_argument("--histogram-csv")
    p.add_argument("--frequency-out", help="write a lemma frequency TSV")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("hamming", help="difficulty report for a pair file")
    p.add_argument("--pairs", required=True)
    p.add_argument("--name", default="pairs")
    p.set_defaults(func=cmd_hamming)

    p = sub.add_parser("score", help="reference-based scoring")
    p.add_argument("--metric", choices=["bleu", "rougeL", "all"], default="all")
    p.add_argument("--candidates", required=True)
    p.add_argument("--references", required=True)
    p.set_defaults(func=cmd_score)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LexiconError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
