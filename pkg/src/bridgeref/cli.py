"""Command line front end: resolve, explain, eval, build-dict.

Exit codes: 0 on success, 1 on data errors (corpus, lexicon, predictions),
2 on configuration or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, ResolverConfig, load_config
from .corpus import (
    CorpusFormatError,
    CorpusStructureError,
    parse_corpus,
)
from .dictbuild import build_dictionary
from .evaluate import (
    evaluate,
    parse_predictions,
    predictions_from_results,
    serialize_predictions,
)
from .explain import render_score_table
from .lexicons import (
    LexiconFormatError,
    load_lexicons,
    load_noun_attributes,
    load_thesaurus,
    load_xnoy,
)
from .resolver import SKIP, detect_targets, resolve, resolve_discourse

DATA_ERROR = 1
CONFIG_ERROR = 2


def _read_corpus(path: str):
    documents = parse_corpus(Path(path).read_text(encoding="utf-8"))
    return {d.doc_id: d for d in documents}


def _load_run_config(args) -> ResolverConfig:
    config = ResolverConfig.default()
    if getattr(args, "config", None):
        config = load_config(args.config, base=config)
    if getattr(args, "no_semantics", False):
        config = config.without_semantics()
    return config


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_resolve(args) -> int:
    corpora = _read_corpus(args.corpus)
    lexicons = load_lexicons(args.lexicons)
    config = _load_run_config(args)
    predictions = []
    for doc_id, discourse in corpora.items():
        results = resolve_discourse(discourse, lexicons, config)
        predictions.extend(predictions_from_results(doc_id, results))
    _write_out(serialize_predictions(predictions), args.out)
    return 0


def _cmd_explain(args) -> int:
    corpora = _read_corpus(args.corpus)
    lexicons = load_lexicons(args.lexicons)
    config = _load_run_config(args)
    if ":" not in args.anaphor:
        raise ConfigError("--anaphor takes DOC:ID")
    doc_id, _, raw_id = args.anaphor.partition(":")
    try:
        phrase_id = int(raw_id)
    except ValueError:
        raise ConfigError(f"--anaphor phrase id must be an integer, got {raw_id!r}") from None
    discourse = corpora.get(doc_id)
    if discourse is None:
        raise CorpusStructureError(f"no document {doc_id!r} in {args.corpus}")
    if not discourse.has_phrase(phrase_id):
        raise CorpusStructureError(f"no phrase {phrase_id} in document {doc_id!r}")
    targets = [t for t in detect_targets(discourse, lexicons)
               if t.phrase_id == phrase_id and t.mode != SKIP]
    if not targets:
        raise CorpusStructureError(
            f"phrase {doc_id}:{phrase_id} is not an anaphora target")
    tables = []
    for target in targets:
        result = resolve(discourse.phrase(phrase_id), target.slot,
                         discourse, lexicons, config)
        tables.append(render_score_table(result, discourse))
    sys.stdout.write("\n".join(tables))
    return 0


def _cmd_eval(args) -> int:
    corpora = _read_corpus(args.corpus)
    predictions = parse_predictions(Path(args.predictions).read_text(encoding="utf-8"))
    report = evaluate(predictions, corpora)
    sys.stdout.write(report.render())
    return 0


def _cmd_build_dict(args) -> int:
    store = load_xnoy(args.xnoy)
    thesaurus = load_thesaurus(args.thesaurus)
    attrs = load_noun_attributes(args.attrs)
    merges = []
    for merge in args.merge or ():
        if ":" not in merge:
            raise ConfigError(f"--merge takes TARGET:SOURCE, got {merge!r}")
        target_y, _, source_y = merge.partition(":")
        merges.append((target_y, source_y))
    _write_out(build_dictionary(store, thesaurus, attrs, tuple(merges)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bridgeref",
        description="Resolve indirect (bridging) anaphora in annotated Japanese text.")
    sub = parser.add_subparsers(dest="command", required=True)

    resolve_p = sub.add_parser("resolve", help="resolve every target in a corpus")
    resolve_p.add_argument("--corpus", required=True)
    resolve_p.add_argument("--lexicons", required=True,
                           help="directory with thesaurus.tsv, caseframes.txt, "
                                "xnoy.tsv, nounattrs.tsv")
    resolve_p.add_argument("--config")
    resolve_p.add_argument("--no-semantics", action="store_true",
                           help="fix all similarity scores to 0")
    resolve_p.add_argument("--out")
    resolve_p.set_defaults(func=_cmd_resolve)

    explain_p = sub.add_parser("explain", help="print the score table of one anaphor")
    explain_p.add_argument("--corpus", required=True)
    explain_p.add_argument("--lexicons", required=True)
    explain_p.add_argument("--config")
    explain_p.add_argument("--no-semantics", action="store_true")
    explain_p.add_argument("--anaphor", required=True, metavar="DOC:ID")
    explain_p.set_defaults(func=_cmd_explain)

    eval_p = sub.add_parser("eval", help="score predictions against gold annotation")
    eval_p.add_argument("--corpus", required=True)
    eval_p.add_argument("--predictions", required=True)
    eval_p.set_defaults(func=_cmd_eval)

    dict_p = sub.add_parser("build-dict",
                            help="arrange X-no-Y examples into draft noun case frames")
    dict_p.add_argument("--xnoy", required=True)
    dict_p.add_argument("--thesaurus", required=True)
    dict_p.add_argument("--attrs", required=True)
    dict_p.add_argument("--merge", action="append", metavar="Y:Y2",
                        help="copy arranged examples of Y2 into Y (repeatable)")
    dict_p.add_argument("--out")
    dict_p.set_defaults(func=_cmd_build_dict)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return CONFIG_ERROR
    except (CorpusFormatError, CorpusStructureError, LexiconFormatError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
