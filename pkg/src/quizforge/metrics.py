"""Evaluation harness: score extracted keywords against teacher gold sets.

Gold and extracted keywords are compared as sets of normalized stems, so
"Engines" in a teacher's file matches an extracted "engine". Precision
validates quality (how much of the extraction is right), recall measures
quantity (how much of the gold set was found).
"""

import json
import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyTruthset, MaterialMismatch, NoExtractionWarning
from .pipeline import remove_noise, tokenize
from .termweight import KeywordSet, term_stems


@dataclass(frozen=True)
class GoldSet:
    material_id: str
    keywords: frozenset[str]


@dataclass(frozen=True)
class ExtractedSet:
    material_id: str
    keywords: frozenset[str]


@dataclass(frozen=True)
class EvalReport:
    material_id: str
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f_measure: float


def normalize_keyword(text: str, stop_words: frozenset[str] | None = None) -> str | None:
    """Lowercase, drop stop words, stem; None if nothing survives."""
    content = remove_noise(tokenize(text, stop_words))
    if not content:
        return None
    return " ".join(t.stem for t in content)


def load_gold_file(path: str | Path, material_id: str, stop_words: frozenset[str] | None = None) -> GoldSet:
    """One keyword per line, blank lines ignored, normalized like extraction."""
    keywords = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        normalized = normalize_keyword(line, stop_words)
        if normalized:
            keywords.add(normalized)
    if not keywords:
        raise EmptyTruthset(f"gold file {path} contains no keywords")
    return GoldSet(material_id=material_id, keywords=frozenset(keywords))


def extracted_set(keywords: KeywordSet) -> ExtractedSet:
    """Project a keyword set onto its distinct normalized stems."""
    return ExtractedSet(
        material_id=keywords.material_id,
        keywords=frozenset(" ".join(term_stems(wt.term)) for wt in keywords.keywords),
    )


def confusion_sets(truth: GoldSet, extracted: ExtractedSet) -> tuple[frozenset, frozenset, frozenset]:
    """(tp, fp, fn) = (truth & extracted, extracted - truth, truth - extracted)."""
    if truth.material_id != extracted.material_id:
        raise MaterialMismatch(
            f"gold set is for {truth.material_id!r}, extraction for {extracted.material_id!r}"
        )
    tp = truth.keywords & extracted.keywords
    fp = extracted.keywords - truth.keywords
    fn = truth.keywords - extracted.keywords
    return frozenset(tp), frozenset(fp), frozenset(fn)


def precision(tp: int, fp: int) -> float:
    """tp / (tp + fp); an empty extraction scores 0 with a warning."""
    if tp + fp == 0:
        warnings.warn("empty extraction, precision defined as 0", NoExtractionWarning)
        return 0.0
    return tp / (tp + fp)


def recall(tp: int, fn: int) -> float:
    """tp / (tp + fn); the truthset is never empty."""
    if tp + fn == 0:
        raise EmptyTruthset("recall is undefined for an empty truthset")
    return tp / (tp + fn)


def f_measure(p: float, r: float) -> float:
    """Harmonic mean of precision and recall."""
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def evaluate(truth: GoldSet, extracted: ExtractedSet) -> EvalReport:
    tp_set, fp_set, fn_set = confusion_sets(truth, extracted)
    p = precision(len(tp_set), len(fp_set))
    r = recall(len(tp_set), len(fn_set))
    return EvalReport(
        material_id=truth.material_id,
        tp=len(tp_set),
        fp=len(fp_set),
        fn=len(fn_set),
        precision=p,
        recall=r,
        f_measure=f_measure(p, r),
    )


def report_to_json(report: EvalReport) -> str:
    return json.dumps(
        {
            "material_id": report.material_id,
            "tp": report.tp,
            "fp": report.fp,
            "fn": report.fn,
            "precision": report.precision,
            "recall": report.recall,
            "f_measure": report.f_measure,
        },
        indent=2,
        ensure_ascii=False,
    ) + "\n"


def reports_to_csv(reports: list[EvalReport]) -> str:
    """Aggregate CSV, floats rendered to 2 decimals."""
    lines = ["material,tp,fp,fn,precision,recall,f_measure"]
    for r in reports:
        lines.append(
            f"{r.material_id},{r.tp},{r.fp},{r.fn},"
            f"{r.precision:.2f},{r.recall:.2f},{r.f_measure:.2f}"
        )
    return "\n".join(lines) + "\n"
