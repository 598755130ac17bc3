"""Session state: document + prompts + log, with revision-checked mutation.

A session is the unit of persistence and sharing. Every mutation appends
events to the log and bumps the revision; the document is always equal to a
replay of the log, which import verifies. The export format doubles as the
storage format: canonical JSON with stable key order and Unicode-scalar
offsets.
"""

from __future__ import annotations

import json
import secrets
import time
from dataclasses import dataclass, field, replace as dc_replace
from typing import Callable, Optional

from . import attribution as attr
from .attribution import AttributedDocument, Label, Span
from .classifier import PromptCategory, classify
from .errors import (
    IntegrityError,
    InvalidPayload,
    ParseError,
    RevisionConflict,
    SchemaVersionUnsupported,
    TextprovError,
    UnknownPrompt,
)
from .events import (
    EventLog,
    ProvenanceEvent,
    append_event,
    detect_sentence_completions,
    redact_prompt as log_redact_prompt,
    replay,
)
from .gateway import CompletionParams, CompletionRequest, Gateway, PromptRecord
from .report import REDACTION_MARKER

SCHEMA_VERSION = 1

# ops that count toward the revision: one per applied mutation
_REVISION_KINDS = frozenset({
    "HumanEdit", "AiPaste", "ManualLabel", "ManualUnlabel", "PromptIssued", "PromptRedacted",
})


def _now_ms() -> int:
    return int(time.time() * 1000)


def new_session_id() -> str:
    # unguessable: a session URL grants read access
    return secrets.token_urlsafe(16)


@dataclass(frozen=True)
class SessionState:
    session_id: str
    document: AttributedDocument = field(default_factory=attr.new_document)
    prompts: tuple[PromptRecord, ...] = ()
    log: EventLog = field(default_factory=EventLog)
    revision: int = 0

    def prompt_by_id(self, prompt_id: str) -> PromptRecord:
        for p in self.prompts:
            if p.id == prompt_id:
                return p
        raise UnknownPrompt(f"unknown prompt {prompt_id!r}")


def new_session(session_id: Optional[str] = None) -> SessionState:
    return SessionState(session_id or new_session_id())


def _check_revision(session: SessionState, expected) -> None:
    if expected is not None and expected != session.revision:
        raise RevisionConflict(expected, session.revision)


def apply_op(session: SessionState, op: dict,
             clock: Callable[[], int] = _now_ms) -> tuple[SessionState, int]:
    """Apply one document mutation or redaction; ops carry the client's
    expected revision and are rejected when stale."""
    kind = op.get("kind")
    _check_revision(session, op.get("expected_revision"))
    ts = clock()
    doc, log = session.document, session.log

    if kind == "insert_text":
        doc = attr.insert_text(doc, op["pos"], op["text"])
        log = append_event(log, "HumanEdit",
                           {"op": "insert", "pos": op["pos"], "text": op["text"]}, ts)
        for _ in range(detect_sentence_completions(session.document.text, doc.text, op["pos"])):
            log = append_event(log, "SentenceCompleted", {}, ts)
    elif kind == "delete_range":
        doc = attr.delete_range(doc, op["start"], op["end"])
        log = append_event(log, "HumanEdit",
                           {"op": "delete", "start": op["start"], "end": op["end"]}, ts)
    elif kind == "replace_range":
        doc = attr.replace_range(doc, op["start"], op["end"], op["text"])
        log = append_event(log, "HumanEdit",
                           {"op": "replace", "start": op["start"], "end": op["end"],
                            "text": op["text"]}, ts)
        for _ in range(sum(1 for ch in op["text"] if ch in ".!?\n")):
            log = append_event(log, "SentenceCompleted", {}, ts)
    elif kind == "paste_ai_response":
        prompt = session.prompt_by_id(op["prompt_id"])
        doc = attr.paste_ai_response(doc, op["pos"], op["text"], prompt)
        # the flag is frozen into the payload so replay survives later redaction
        verbatim = op["text"] in prompt.response_text
        log = append_event(log, "AiPaste",
                           {"pos": op["pos"], "text": op["text"],
                            "prompt_id": prompt.id, "verbatim": verbatim}, ts)
    elif kind == "manual_label":
        link = op.get("prompt_id")
        if link is not None:
            session.prompt_by_id(link)
        doc = attr.manual_label(doc, op["start"], op["end"], Label(op["label"]), link)
        payload = {"start": op["start"], "end": op["end"], "label": op["label"]}
        if link is not None:
            payload["prompt_id"] = link
        log = append_event(log, "ManualLabel", payload, ts)
    elif kind == "manual_unlabel":
        doc = attr.manual_unlabel(doc, op["start"], op["end"])
        log = append_event(log, "ManualUnlabel", {"start": op["start"], "end": op["end"]}, ts)
    elif kind == "redact_prompt":
        return redact(session, op["prompt_id"], clock=clock)
    else:
        raise InvalidPayload(f"unknown op kind {kind!r}")

    out = dc_replace(session, document=doc, log=log, revision=session.revision + 1)
    return out, out.revision


def issue_prompt(session: SessionState, gateway: Gateway, prompt_text: str,
                 context_text: Optional[str] = None,
                 params: Optional[CompletionParams] = None,
                 expected_revision=None,
                 clock: Callable[[], int] = _now_ms) -> tuple[SessionState, PromptRecord]:
    """Run the gateway and classifier, store the prompt card, log the exchange.

    A failed completion raises before anything is logged: provider errors
    never corrupt session state.
    """
    _check_revision(session, expected_revision)
    request = CompletionRequest(prompt_text, context_text, params or CompletionParams(
        model_id=gateway.model_id))
    response = gateway.complete(request)
    category, _method = classify(prompt_text, gateway)
    ts = clock()
    record = PromptRecord(
        id=f"p{len(session.prompts) + 1}",
        issued_at=ts,
        prompt_text=prompt_text,
        context_text=context_text,
        response_text=response,
        category=category,
        model_id=gateway.model_id,
    )
    log = append_event(session.log, "PromptIssued",
                       {"prompt_id": record.id, "category": category.value}, ts)
    log = append_event(log, "ResponseReceived", {"prompt_id": record.id}, ts)
    out = dc_replace(session, prompts=session.prompts + (record,), log=log,
                     revision=session.revision + 1)
    return out, record


def regenerate(session: SessionState, gateway: Gateway, prompt_id: str,
               expected_revision=None,
               clock: Callable[[], int] = _now_ms) -> tuple[SessionState, PromptRecord]:
    """Re-issue an existing prompt; the new card links back to the original
    and keeps its category (same text, same classification)."""
    _check_revision(session, expected_revision)
    original = session.prompt_by_id(prompt_id)
    if original.redacted:
        raise UnknownPrompt(f"prompt {prompt_id!r} is redacted")
    request = CompletionRequest(original.prompt_text, original.context_text,
                                CompletionParams(model_id=gateway.model_id))
    response = gateway.complete(request)
    ts = clock()
    record = PromptRecord(
        id=f"p{len(session.prompts) + 1}",
        issued_at=ts,
        prompt_text=original.prompt_text,
        context_text=original.context_text,
        response_text=response,
        category=original.category,
        model_id=gateway.model_id,
        regeneration_of=prompt_id,
    )
    log = append_event(session.log, "PromptIssued",
                       {"prompt_id": record.id, "category": record.category.value}, ts)
    log = append_event(log, "ResponseReceived", {"prompt_id": record.id}, ts)
    log = append_event(log, "Regenerated",
                       {"prompt_id": record.id, "regeneration_of": prompt_id}, ts)
    out = dc_replace(session, prompts=session.prompts + (record,), log=log,
                     revision=session.revision + 1)
    return out, record


def redact(session: SessionState, prompt_id: str, expected_revision=None,
           clock: Callable[[], int] = _now_ms) -> tuple[SessionState, int]:
    """Hide a prompt's text everywhere while keeping its category and its
    footprint in statistics and the timeline."""
    _check_revision(session, expected_revision)
    session.prompt_by_id(prompt_id)
    log = log_redact_prompt(session.log, prompt_id, clock())
    prompts = tuple(
        dc_replace(p, redacted=True, prompt_text=REDACTION_MARKER,
                   response_text=REDACTION_MARKER,
                   context_text=REDACTION_MARKER if p.context_text is not None else None)
        if p.id == prompt_id else p
        for p in session.prompts
    )
    out = dc_replace(session, prompts=prompts, log=log, revision=session.revision + 1)
    return out, out.revision


# --- serialization (schema v1; also the storage format) ---

def _span_to_dict(s: Span) -> dict:
    d = {"start": s.start, "end": s.end, "label": s.label.value, "verbatim": s.verbatim}
    if s.prompt_link is not None:
        d["prompt_id"] = s.prompt_link
    return d


def _prompt_to_dict(p: PromptRecord) -> dict:
    d = {
        "id": p.id,
        "issued_at": p.issued_at,
        "prompt": p.prompt_text,
        "response": p.response_text,
        "category": p.category.value,
        "model": p.model_id,
        "redacted": p.redacted,
    }
    if p.context_text is not None:
        d["context"] = p.context_text
    if p.regeneration_of is not None:
        d["regeneration_of"] = p.regeneration_of
    return d


def export_session(session: SessionState) -> bytes:
    data = {
        "version": SCHEMA_VERSION,
        "session_id": session.session_id,
        "revision": session.revision,
        "text": session.document.text,
        "spans": [_span_to_dict(s) for s in session.document.spans],
        "prompts": [_prompt_to_dict(p) for p in session.prompts],
        "events": [
            {"seq": e.seq, "timestamp": e.timestamp, "kind": e.kind, "payload": e.payload}
            for e in session.log.events
        ],
    }
    return json.dumps(data, ensure_ascii=False, sort_keys=True,
                      separators=(",", ":")).encode("utf-8")


def import_session(raw: bytes) -> SessionState:
    try:
        data = json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("session file must be a JSON object")
    if data.get("version") != SCHEMA_VERSION:
        raise SchemaVersionUnsupported(f"unsupported schema version {data.get('version')!r}")

    try:
        spans = tuple(
            Span(d["start"], d["end"], Label(d["label"]), d.get("prompt_id"),
                 bool(d.get("verbatim", False)))
            for d in data["spans"]
        )
        document = AttributedDocument(data["text"], spans)
        prompts = tuple(
            PromptRecord(
                id=d["id"], issued_at=d["issued_at"], prompt_text=d["prompt"],
                context_text=d.get("context"), response_text=d["response"],
                category=PromptCategory(d["category"]), model_id=d["model"],
                regeneration_of=d.get("regeneration_of"),
                redacted=bool(d.get("redacted", False)),
            )
            for d in data["prompts"]
        )
        events = tuple(
            ProvenanceEvent(d["seq"], d["timestamp"], d["kind"], dict(d["payload"]))
            for d in data["events"]
        )
        session_id = data["session_id"]
        revision = data["revision"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed session file: {exc}") from exc

    try:
        attr.check_invariants(document)
    except AssertionError as exc:
        raise IntegrityError(f"span list violates tiling: {exc}") from exc
    for i, e in enumerate(events):
        if e.seq != i + 1:
            raise IntegrityError(f"event seq not dense at position {i}: {e.seq}")
    log = EventLog(events)

    known = log.known_prompt_ids()
    for p in prompts:
        if p.id not in known:
            raise IntegrityError(f"prompt {p.id!r} has no PromptIssued event")
    for s in spans:
        if s.prompt_link is not None and s.prompt_link not in known:
            raise IntegrityError(f"span links unknown prompt {s.prompt_link!r}")

    expected_revision = sum(1 for e in events if e.kind in _REVISION_KINDS)
    # regenerations log PromptIssued as part of the same op
    expected_revision -= sum(1 for e in events if e.kind == "Regenerated")
    if revision != expected_revision:
        raise IntegrityError(f"revision {revision} does not match event log "
                             f"({expected_revision} mutations)")

    try:
        replayed = replay(log.events, {p.id: p for p in prompts})
    except TextprovError as exc:
        raise IntegrityError(f"log does not replay: {exc}") from exc
    if replayed != document:
        raise IntegrityError("embedded document does not match replay of the log")

    return SessionState(session_id, document, prompts, log, revision)
