"""Summary statistics: how much of the text each origin owns, and prompt counts.

Fractions are computed on two bases. The character basis is exact span
arithmetic; the word basis assigns each word (maximal run of non-whitespace)
the label held by a strict majority of its characters, ties going to the
human. Both are always reported; the display favors characters, policy
checking favors words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .attribution import AttributedDocument, Label

_WORD_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class SummaryStats:
    char_fraction: dict[str, float]
    word_fraction: dict[str, float]
    prompt_counts: dict[str, int]
    total_chars: int
    total_words: int

    def to_dict(self) -> dict:
        return {
            "char_fraction": self.char_fraction,
            "word_fraction": self.word_fraction,
            "prompt_counts": self.prompt_counts,
            "total_chars": self.total_chars,
            "total_words": self.total_words,
        }


def _char_label_array(doc: AttributedDocument) -> list[Label]:
    labels: list[Label] = []
    for span in doc.spans:
        labels.extend([span.label] * (span.end - span.start))
    return labels


def word_labels(doc: AttributedDocument) -> list[tuple[tuple[int, int], Label]]:
    """Each word with its majority label; a word with no strict majority is human."""
    chars = _char_label_array(doc)
    out = []
    for m in _WORD_RE.finditer(doc.text):
        start, end = m.span()
        counts: dict[Label, int] = {}
        for label in chars[start:end]:
            counts[label] = counts.get(label, 0) + 1
        best = max(counts, key=lambda k: counts[k])
        label = best if counts[best] * 2 > (end - start) else Label.HUMAN
        out.append(((start, end), label))
    return out


def _fractions(counts: dict[Label, int], total: int) -> dict[str, float]:
    if total == 0:
        return {label.value: 0.0 for label in Label}
    return {label.value: counts.get(label, 0) / total for label in Label}


def summarize(document: AttributedDocument, prompts=()) -> SummaryStats:
    """Per-label text fractions plus edit/generate prompt counts."""
    total_chars = len(document.text)
    char_counts: dict[Label, int] = {}
    for span in document.spans:
        char_counts[span.label] = char_counts.get(span.label, 0) + (span.end - span.start)

    words = word_labels(document)
    word_counts: dict[Label, int] = {}
    for _, label in words:
        word_counts[label] = word_counts.get(label, 0) + 1

    prompt_counts = {"edit": 0, "generate": 0}
    for p in prompts:
        prompt_counts[p.category.value] += 1

    return SummaryStats(
        char_fraction=_fractions(char_counts, total_chars),
        word_fraction=_fractions(word_counts, len(words)),
        prompt_counts=prompt_counts,
        total_chars=total_chars,
        total_words=len(words),
    )
