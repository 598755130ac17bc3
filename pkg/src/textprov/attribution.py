"""Attributed document: text plus character-level origin labels.

Every character of the document carries exactly one label (human, ai_written,
ai_influenced), an optional link to the prompt that produced it, and a flag
recording whether it was pasted unmodified from the linked response. Spans are
a normalized view over the per-character state: sorted, non-overlapping,
tiling [0, len(text)) with no gaps, and never holding two adjacent spans with
identical (label, prompt_link, verbatim).

All offsets are Unicode scalar indices (Python string indices), never bytes.
Every operation is a pure function: it takes a document and returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import EmptyRange, EmptyText, InvalidLabel, OutOfBounds


class Label(str, Enum):
    HUMAN = "human"
    AI_WRITTEN = "ai_written"
    AI_INFLUENCED = "ai_influenced"


@dataclass(frozen=True)
class Span:
    start: int
    end: int
    label: Label
    prompt_link: Optional[str] = None
    verbatim: bool = False

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"empty span [{self.start},{self.end})")
        if self.label is Label.HUMAN and (self.prompt_link is not None or self.verbatim):
            raise ValueError("human spans carry no prompt link and are never verbatim")

    @property
    def key(self):
        return (self.label, self.prompt_link, self.verbatim)


@dataclass(frozen=True)
class AttributedDocument:
    text: str = ""
    spans: tuple[Span, ...] = ()


def _normalize(spans: list[Span]) -> tuple[Span, ...]:
    """Merge adjacent spans with identical (label, prompt_link, verbatim)."""
    out: list[Span] = []
    for span in spans:
        if out and out[-1].end == span.start and out[-1].key == span.key:
            out[-1] = Span(out[-1].start, span.end, *span.key)
        else:
            out.append(span)
    return tuple(out)


def _check_pos(doc: AttributedDocument, pos: int, *, insert: bool) -> None:
    limit = len(doc.text) if insert else len(doc.text) - 1
    if not isinstance(pos, int) or pos < 0 or pos > limit:
        raise OutOfBounds(f"position {pos} out of bounds for length {len(doc.text)}")


def _check_range(doc: AttributedDocument, start: int, end: int) -> None:
    if start < 0 or end > len(doc.text) or start > end:
        raise OutOfBounds(f"range [{start},{end}) out of bounds for length {len(doc.text)}")
    if start == end:
        raise EmptyRange(f"range [{start},{end}) is empty")


def new_document() -> AttributedDocument:
    return AttributedDocument()


def insert_attributed(
    doc: AttributedDocument,
    pos: int,
    text: str,
    label: Label,
    prompt_link: Optional[str] = None,
    verbatim: bool = False,
) -> AttributedDocument:
    """Insert text at pos with an explicit attribution. Shared edit primitive."""
    _check_pos(doc, pos, insert=True)
    if text == "":
        raise EmptyText("inserted text must be non-empty")
    n = len(text)
    spans: list[Span] = []
    for span in doc.spans:
        if span.end <= pos:
            spans.append(span)
        elif span.start >= pos:
            spans.append(Span(span.start + n, span.end + n, *span.key))
        else:  # pos strictly inside: split
            spans.append(Span(span.start, pos, *span.key))
            spans.append(Span(pos + n, span.end + n, *span.key))
    spans.append(Span(pos, pos + n, label, prompt_link, verbatim))
    spans.sort(key=lambda s: s.start)
    return AttributedDocument(doc.text[:pos] + text + doc.text[pos:], _normalize(spans))


def insert_text(doc: AttributedDocument, pos: int, text: str) -> AttributedDocument:
    """Human typing: inserted characters are labeled human."""
    return insert_attributed(doc, pos, text, Label.HUMAN)


def delete_range(doc: AttributedDocument, start: int, end: int) -> AttributedDocument:
    _check_range(doc, start, end)

    def adjust(x: int) -> int:
        if x <= start:
            return x
        return start if x <= end else x - (end - start)

    spans = []
    for span in doc.spans:
        ns, ne = adjust(span.start), adjust(span.end)
        if ns < ne:
            spans.append(Span(ns, ne, *span.key))
    return AttributedDocument(doc.text[:start] + doc.text[end:], _normalize(spans))


def replace_range(doc: AttributedDocument, start: int, end: int, text: str) -> AttributedDocument:
    """Atomic delete + human insert: rewritten characters become human."""
    _check_range(doc, start, end)
    if text == "":
        raise EmptyText("replacement text must be non-empty")
    return insert_text(delete_range(doc, start, end), start, text)


def paste_ai_response(doc: AttributedDocument, pos: int, text: str, prompt) -> AttributedDocument:
    """Paste from a prompt card: characters become ai_written, linked to the prompt.

    verbatim is true iff the pasted text is a contiguous substring of the
    linked response; a modified paste keeps the label and link but not the flag.
    """
    verbatim = text != "" and text in prompt.response_text
    return insert_attributed(doc, pos, text, Label.AI_WRITTEN, prompt.id, verbatim)


def manual_label(
    doc: AttributedDocument,
    start: int,
    end: int,
    label: Label,
    prompt_link: Optional[str] = None,
) -> AttributedDocument:
    """Writer-applied Highlight: overwrites prior attribution unconditionally."""
    if label not in (Label.AI_WRITTEN, Label.AI_INFLUENCED):
        raise InvalidLabel(f"manual label must be ai_written or ai_influenced, got {label!r}")
    return _overwrite(doc, start, end, label, prompt_link)


def manual_unlabel(doc: AttributedDocument, start: int, end: int) -> AttributedDocument:
    """Writer-applied Unhighlight: characters become human, links removed."""
    return _overwrite(doc, start, end, Label.HUMAN, None)


def _overwrite(doc, start, end, label, prompt_link):
    _check_range(doc, start, end)
    spans: list[Span] = []
    for span in doc.spans:
        if span.start < start:
            spans.append(Span(span.start, min(span.end, start), *span.key))
        if span.end > end:
            spans.append(Span(max(span.start, end), span.end, *span.key))
    spans.append(Span(start, end, label, prompt_link, False))
    spans.sort(key=lambda s: s.start)
    return AttributedDocument(doc.text, _normalize(spans))


def label_at(doc: AttributedDocument, pos: int) -> tuple[Label, Optional[str]]:
    _check_pos(doc, pos, insert=False)
    for span in doc.spans:
        if span.start <= pos < span.end:
            return span.label, span.prompt_link
    raise AssertionError("tiling invariant violated")  # pragma: no cover


def ranges_for_prompt(doc: AttributedDocument, prompt_id: str) -> list[tuple[int, int, Label]]:
    """All maximal ranges linked to the prompt, in document order."""
    out: list[tuple[int, int, Label]] = []
    for span in doc.spans:
        if span.prompt_link != prompt_id:
            continue
        if out and out[-1][1] == span.start and out[-1][2] == span.label:
            out[-1] = (out[-1][0], span.end, span.label)
        else:
            out.append((span.start, span.end, span.label))
    return out


def check_invariants(doc: AttributedDocument) -> None:
    """Raise AssertionError unless spans are sorted, gap-free, and normal-form."""
    pos = 0
    prev: Optional[Span] = None
    for span in doc.spans:
        assert span.start == pos, f"gap or overlap at {span.start}, expected {pos}"
        assert span.start < span.end
        if prev is not None:
            assert prev.key != span.key, f"not normal form at {span.start}"
        pos = span.end
        prev = span
    assert pos == len(doc.text), f"spans cover [0,{pos}) but text has length {len(doc.text)}"
