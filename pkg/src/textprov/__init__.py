"""textprov: character-level provenance engine for AI-assisted writing."""

from .attribution import (
    AttributedDocument,
    Label,
    Span,
    delete_range,
    insert_text,
    label_at,
    manual_label,
    manual_unlabel,
    new_document,
    paste_ai_response,
    ranges_for_prompt,
    replace_range,
)
from .analytics import SummaryStats, summarize, word_labels
from .classifier import PromptCategory, classification_query, classify, heuristic_category, parse_category
from .events import EventLog, ProvenanceEvent, TimelineGlyph, append_event, replay, timeline_view
from .gateway import (
    CompletionParams,
    CompletionRequest,
    Gateway,
    LiveTransport,
    PromptRecord,
    ScriptedTransport,
    SeededTransport,
    suggested_interactions,
)
from .policy import ConformanceReport, PolicyProfile, builtin_policies, check
from .report import render_disclosure
from .session import (
    SessionState,
    apply_op,
    export_session,
    import_session,
    issue_prompt,
    new_session,
    redact,
    regenerate,
)

__version__ = "0.1.0"
