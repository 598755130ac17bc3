"""Append-only provenance log and deterministic replay.

The log is the source of truth for a writing session: every mutation of the
document, every prompt exchange, and every correction is one event. Events
are ordered by a dense sequence number; timestamps are informational only and
replay never consults them. Corrections are new events (PromptRedacted,
ManualUnlabel), never edits of history.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from . import attribution as attr
from .attribution import AttributedDocument, Label
from .errors import (
    AlreadyRedacted,
    DanglingPromptRef,
    InvalidPayload,
    ReplayDivergence,
    TextprovError,
    UnknownPrompt,
)

SENTENCE_TERMINATORS = frozenset({".", "!", "?", "\n"})

KINDS = frozenset({
    "PromptIssued", "ResponseReceived", "AiPaste", "HumanEdit",
    "SentenceCompleted", "ManualLabel", "ManualUnlabel", "Regenerated",
    "PromptRedacted",
})

# payload fields required per kind (extra fields are allowed)
_REQUIRED = {
    "PromptIssued": {"prompt_id", "category"},
    "ResponseReceived": {"prompt_id"},
    "AiPaste": {"pos", "text", "prompt_id", "verbatim"},
    "HumanEdit": {"op"},
    "SentenceCompleted": set(),
    "ManualLabel": {"start", "end", "label"},
    "ManualUnlabel": {"start", "end"},
    "Regenerated": {"prompt_id", "regeneration_of"},
    "PromptRedacted": {"prompt_id"},
}

# kinds whose payload references a prompt that must already exist in the log
_PROMPT_REF_KINDS = {"AiPaste", "ResponseReceived", "Regenerated", "PromptRedacted"}


@dataclass(frozen=True)
class ProvenanceEvent:
    seq: int
    timestamp: int
    kind: str
    payload: dict


@dataclass(frozen=True)
class EventLog:
    events: tuple[ProvenanceEvent, ...] = ()

    def __len__(self):
        return len(self.events)

    def known_prompt_ids(self) -> set:
        return {e.payload["prompt_id"] for e in self.events if e.kind == "PromptIssued"}


def _validate_payload(kind: str, payload: dict) -> None:
    if kind not in KINDS:
        raise InvalidPayload(f"unknown event kind {kind!r}")
    missing = _REQUIRED[kind] - payload.keys()
    if missing:
        raise InvalidPayload(f"{kind} payload missing {sorted(missing)}")
    if kind == "HumanEdit":
        op = payload["op"]
        if op == "insert":
            needed = {"pos", "text"}
        elif op == "delete":
            needed = {"start", "end"}
        elif op == "replace":
            needed = {"start", "end", "text"}
        else:
            raise InvalidPayload(f"unknown HumanEdit op {op!r}")
        if needed - payload.keys():
            raise InvalidPayload(f"HumanEdit {op} payload missing {sorted(needed - payload.keys())}")


def append_event(log: EventLog, kind: str, payload: dict, timestamp: int) -> EventLog:
    """Append one event; seq is assigned, never supplied."""
    _validate_payload(kind, payload)
    if kind in _PROMPT_REF_KINDS or (kind == "ManualLabel" and payload.get("prompt_id") is not None):
        if payload["prompt_id"] not in log.known_prompt_ids():
            raise DanglingPromptRef(f"{kind} references unknown prompt {payload['prompt_id']!r}")
    seq = log.events[-1].seq + 1 if log.events else 1
    return EventLog(log.events + (ProvenanceEvent(seq, int(timestamp), kind, dict(payload)),))


def detect_sentence_completions(old_text: str, new_text: str, insert_pos: int) -> int:
    """Number of sentence terminators contained in one human insertion."""
    inserted = new_text[insert_pos:insert_pos + (len(new_text) - len(old_text))]
    return sum(1 for ch in inserted if ch in SENTENCE_TERMINATORS)


def redact_prompt(log: EventLog, prompt_id: str, timestamp: int) -> EventLog:
    if prompt_id not in log.known_prompt_ids():
        raise UnknownPrompt(f"unknown prompt {prompt_id!r}")
    if any(e.kind == "PromptRedacted" and e.payload["prompt_id"] == prompt_id for e in log.events):
        raise AlreadyRedacted(f"prompt {prompt_id!r} already redacted")
    return append_event(log, "PromptRedacted", {"prompt_id": prompt_id}, timestamp)


MUTATION_KINDS = frozenset({"HumanEdit", "AiPaste", "ManualLabel", "ManualUnlabel"})


def apply_mutation(doc: AttributedDocument, event: ProvenanceEvent) -> AttributedDocument:
    """Execute one document-mutating event; non-mutating kinds are identity."""
    p = event.payload
    if event.kind == "HumanEdit":
        if p["op"] == "insert":
            return attr.insert_text(doc, p["pos"], p["text"])
        if p["op"] == "delete":
            return attr.delete_range(doc, p["start"], p["end"])
        return attr.replace_range(doc, p["start"], p["end"], p["text"])
    if event.kind == "AiPaste":
        # verbatim was fixed at paste time; replay trusts the recorded flag so
        # a later redaction of the response text cannot change history
        return attr.insert_attributed(
            doc, p["pos"], p["text"], Label.AI_WRITTEN, p["prompt_id"], p["verbatim"]
        )
    if event.kind == "ManualLabel":
        return attr.manual_label(doc, p["start"], p["end"], Label(p["label"]), p.get("prompt_id"))
    if event.kind == "ManualUnlabel":
        return attr.manual_unlabel(doc, p["start"], p["end"])
    return doc


def replay(events: Iterable[ProvenanceEvent], prompts: Optional[Mapping] = None) -> AttributedDocument:
    """Reconstruct the document by re-executing mutation events in seq order.

    Pure and deterministic: no clock, randomness, or locale dependence.
    Replaying a prefix of the log yields the state after that prefix.
    """
    doc = attr.new_document()
    for event in events:
        try:
            doc = apply_mutation(doc, event)
        except TextprovError as exc:
            raise ReplayDivergence(f"event seq={event.seq} kind={event.kind} failed: {exc}") from exc
    return doc


@dataclass(frozen=True)
class TimelineGlyph:
    seq: int
    category: str  # Writing | PromptEdit | PromptGenerate


def timeline_view(log: EventLog) -> list[TimelineGlyph]:
    """One glyph per completed sentence and per issued prompt, in seq order."""
    glyphs = []
    for e in log.events:
        if e.kind == "SentenceCompleted":
            glyphs.append(TimelineGlyph(e.seq, "Writing"))
        elif e.kind == "PromptIssued":
            cat = "PromptEdit" if e.payload["category"] == "edit" else "PromptGenerate"
            glyphs.append(TimelineGlyph(e.seq, cat))
    return glyphs
