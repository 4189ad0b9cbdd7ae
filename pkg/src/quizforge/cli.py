"""Command-line interface.

Subcommands: extract, generate, evaluate, stats, serve, export. Exit codes:
0 success, 1 module error (with a diagnostic), 2 unreadable input file,
64 bad flags/usage. The database path comes from QUIZFORGE_DB_PATH
(default ./quizforge.db).
"""

import argparse
import os
import sys
from pathlib import Path

from .bank import QuestionBank, derive_seed, make_material
from .errors import QuizforgeError
from .mcq import generate_mcqs, questions_to_json
from .metrics import evaluate, extracted_set, load_gold_file, report_to_json, reports_to_csv
from .pipeline import DEFAULT_MIN_SENTENCE_LEN, build_corpus
from .stopwords import load_stopwords
from .termweight import DEFAULT_TOP_K, extract_keywords, keywords_to_json

EX_USAGE = 64
EX_NOINPUT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _add_corpus_options(parser):
    parser.add_argument("--min-sentence-len", type=int, default=DEFAULT_MIN_SENTENCE_LEN,
                        help="drop sentences with fewer raw words (default 5)")
    parser.add_argument("--stopwords", metavar="FILE",
                        help="stop-word file, one word per line (default: bundled list)")


def _add_extraction_options(parser):
    parser.add_argument("--n", type=int, default=1, help="gram size (default 1)")
    parser.add_argument("--top-k", type=int, default=DEFAULT_TOP_K,
                        help="keywords per sentence (default 5)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quizforge",
                     description="Generate and evaluate cloze MCQs from plain-text lesson materials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", parents=[], help="write the TF-IDF keyword dump for a material")
    p.add_argument("file")
    _add_extraction_options(p)
    _add_corpus_options(p)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("generate", help="generate suggested questions and persist them")
    p.add_argument("file")
    _add_extraction_options(p)
    _add_corpus_options(p)
    p.add_argument("--seed", type=int, help="RNG seed (default: derived from material hash)")
    p.add_argument("--max-questions", type=int)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("evaluate", help="score extracted keywords against a gold file")
    p.add_argument("file")
    p.add_argument("--gold", required=True, metavar="FILE")
    _add_extraction_options(p)
    _add_corpus_options(p)
    p.add_argument("--out", metavar="FILE", help="write the report as JSON")
    p.add_argument("--csv", metavar="FILE", help="write the aggregate CSV row")

    p = sub.add_parser("stats", help="print corpus statistics for a material")
    p.add_argument("file")
    _add_corpus_options(p)

    p = sub.add_parser("serve", help="run the HTTP service for the review board")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")

    p = sub.add_parser("export", help="write the accepted question bank as JSON")
    p.add_argument("--subject")
    p.add_argument("--session")
    p.add_argument("--out", metavar="FILE")

    return parser


def _read_material(args):
    path = Path(args.file)
    try:
        body = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"quizforge: cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(EX_NOINPUT)
    return make_material(title=path.name, body=body)


def _stop_words(args):
    stopwords_file = getattr(args, "stopwords", None)
    if stopwords_file:
        return load_stopwords(stopwords_file)
    return None


def _corpus(args):
    material = _read_material(args)
    stop_words = _stop_words(args)
    corpus = build_corpus(material, stop_words=stop_words, min_sentence_len=args.min_sentence_len)
    return material, corpus, stop_words


def _write_out(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _bank() -> QuestionBank:
    return QuestionBank(os.environ.get("QUIZFORGE_DB_PATH", "quizforge.db"))


def _cmd_extract(args) -> int:
    _, corpus, _ = _corpus(args)
    keywords = extract_keywords(corpus, n=args.n, top_k=args.top_k)
    _write_out(keywords_to_json(keywords), args.out)
    return 0


def _cmd_generate(args) -> int:
    material, corpus, _ = _corpus(args)
    keywords = extract_keywords(corpus, n=args.n, top_k=args.top_k)
    seed = args.seed if args.seed is not None else derive_seed(material.id)
    questions = generate_mcqs(keywords, corpus, seed)
    if args.max_questions is not None:
        questions = questions[: args.max_questions]
    store = _bank()
    store.store_material(material)
    store.save_questions(questions)
    store.close()
    _write_out(questions_to_json(questions), args.out)
    return 0


def _cmd_evaluate(args) -> int:
    material, corpus, stop_words = _corpus(args)
    keywords = extract_keywords(corpus, n=args.n, top_k=args.top_k)
    gold_path = Path(args.gold)
    if not gold_path.is_file():
        print(f"quizforge: cannot read {gold_path}: no such file", file=sys.stderr)
        return EX_NOINPUT
    truth = load_gold_file(gold_path, material.id, stop_words)
    report = evaluate(truth, extracted_set(keywords))
    print(
        f"material {report.material_id} tp {report.tp} fp {report.fp} fn {report.fn} "
        f"precision {report.precision:.2f} recall {report.recall:.2f} f_measure {report.f_measure:.2f}"
    )
    if args.out:
        Path(args.out).write_text(report_to_json(report), encoding="utf-8")
    if args.csv:
        Path(args.csv).write_text(reports_to_csv([report]), encoding="utf-8")
    return 0


def _cmd_stats(args) -> int:
    _, corpus, _ = _corpus(args)
    stats = corpus.stats
    print(f"sentences {stats.n_sentences} words {stats.n_words}")
    print(f"min {stats.min_len} max {stats.max_len} mean {stats.mean_len:.1f}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _cmd_export(args) -> int:
    store = _bank()
    document = store.export_bank(subject=args.subject, session=args.session)
    store.close()
    _write_out(document, args.out)
    return 0


_COMMANDS = {
    "extract": _cmd_extract,
    "generate": _cmd_generate,
    "evaluate": _cmd_evaluate,
    "stats": _cmd_stats,
    "serve": _cmd_serve,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except QuizforgeError as exc:
        print(f"quizforge: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
