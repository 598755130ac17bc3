"""Binary prompt categorization: editorial help vs generation of new text.

The primary path asks the language model with a fixed classification template;
when the model is unreachable or its reply is ambiguous, a deterministic
keyword heuristic takes over so classification never blocks the writing flow.
"""

from __future__ import annotations

import re
from enum import Enum

from .errors import EmptyPrompt, TransportError, Unparseable


class PromptCategory(str, Enum):
    EDIT = "edit"
    GENERATE = "generate"


CLASSIFICATION_TEMPLATE = (
    "For the input text, reply 'Edit' or 'Generate' if the text intends to "
    "edit existing text or generate new text. Consider paraphrasing an "
    "existing text, or grammatical and spelling check as an Edit. "
    "Input sentence - "
)

EDIT_KEYWORDS = frozenset({
    "fix", "correct", "rephrase", "paraphrase", "rewrite", "shorten",
    "proofread", "grammar", "spelling", "edit", "revise", "condense", "polish",
})

_WORD_RE = re.compile(r"[a-z]+")


def classification_query(prompt_text: str) -> str:
    """The exact message sent to the model to categorize a prompt."""
    if not prompt_text:
        raise EmptyPrompt("prompt text must be non-empty")
    return CLASSIFICATION_TEMPLATE + prompt_text


def parse_category(reply: str) -> PromptCategory:
    """Case-insensitive scan; ambiguous or unrecognizable replies are rejected."""
    lowered = reply.lower()
    has_edit = "edit" in lowered
    has_generate = "generate" in lowered
    if has_edit and not has_generate:
        return PromptCategory.EDIT
    if has_generate and not has_edit:
        return PromptCategory.GENERATE
    raise Unparseable(f"cannot read a category from {reply!r}")


def heuristic_category(prompt_text: str) -> PromptCategory:
    """Deterministic offline fallback: edit keywords as whole words, else generate."""
    if not prompt_text:
        raise EmptyPrompt("prompt text must be non-empty")
    words = set(_WORD_RE.findall(prompt_text.lower()))
    return PromptCategory.EDIT if words & EDIT_KEYWORDS else PromptCategory.GENERATE


def classify(prompt_text: str, gateway) -> tuple[PromptCategory, str]:
    """Returns (category, method) where method is "llm" or "heuristic".

    Total for non-empty input: any transport failure or unparseable reply
    falls back to the heuristic.
    """
    query = classification_query(prompt_text)
    try:
        reply = gateway.send_raw(query)
        return parse_category(reply), "llm"
    except (TransportError, Unparseable):
        return heuristic_category(prompt_text), "heuristic"
