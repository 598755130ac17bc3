"""Static disclosure report: annotated text, statistics, prompts, timeline.

Rendering is a pure function of the session snapshot; the same snapshot
always yields byte-identical output. Three formats: markdown (fenced
annotations), html (inline background colors matching the editor), and
structured (JSON for machine consumption).
"""

from __future__ import annotations

import html as html_mod
import json

from .analytics import summarize
from .attribution import Label, ranges_for_prompt
from .errors import UnsupportedFormat
from .events import timeline_view

REDACTION_MARKER = "[redacted by author]"

HIGHLIGHT_COLORS = {
    Label.AI_WRITTEN: "#F5A623",   # orange
    Label.AI_INFLUENCED: "#7ED321",  # green
}

_MD_FENCES = {
    Label.AI_WRITTEN: ("⟦AI⟧", "⟦/AI⟧"),
    Label.AI_INFLUENCED: ("⟦INF⟧", "⟦/INF⟧"),
}

LABEL_TITLES = {
    Label.HUMAN: "Author-written",
    Label.AI_WRITTEN: "AI-written",
    Label.AI_INFLUENCED: "AI-influenced",
}


def render_disclosure(session, format: str = "markdown") -> bytes:
    if format == "markdown":
        return _render_markdown(session).encode("utf-8")
    if format == "html":
        return _render_html(session).encode("utf-8")
    if format == "structured":
        return _render_structured(session).encode("utf-8")
    raise UnsupportedFormat(f"unknown report format {format!r}")


def _prompt_text(p) -> str:
    return REDACTION_MARKER if p.redacted else p.prompt_text


def _response_text(p) -> str:
    return REDACTION_MARKER if p.redacted else p.response_text


def _timeline_summary(session) -> dict:
    glyphs = timeline_view(session.log)
    return {
        "writing": sum(1 for g in glyphs if g.category == "Writing"),
        "edit_prompts": sum(1 for g in glyphs if g.category == "PromptEdit"),
        "generate_prompts": sum(1 for g in glyphs if g.category == "PromptGenerate"),
        "glyphs": [{"seq": g.seq, "category": g.category} for g in glyphs],
    }


def _stats_rows(stats):
    for label in (Label.HUMAN, Label.AI_WRITTEN, Label.AI_INFLUENCED):
        yield (
            LABEL_TITLES[label],
            stats.char_fraction[label.value],
            stats.word_fraction[label.value],
        )


def _render_markdown(session) -> str:
    stats = summarize(session.document, session.prompts)
    lines = ["# AI Assistance Disclosure", "", "## Annotated text", ""]

    annotated = []
    for span in session.document.spans:
        piece = session.document.text[span.start:span.end]
        if span.label in _MD_FENCES:
            open_f, close_f = _MD_FENCES[span.label]
            piece = open_f + piece + close_f
        annotated.append(piece)
    lines.append("".join(annotated) if annotated else "(empty document)")

    lines += ["", "## Summary statistics", ""]
    lines.append("| Origin | Characters | Words |")
    lines.append("|---|---|---|")
    for title, cf, wf in _stats_rows(stats):
        lines.append(f"| {title} | {cf:.2%} | {wf:.2%} |")
    lines.append("")
    lines.append(
        f"Prompts: {stats.prompt_counts['edit']} edit, "
        f"{stats.prompt_counts['generate']} generate."
    )

    lines += ["", "## Prompts", ""]
    if not session.prompts:
        lines.append("No prompts were issued.")
    for i, p in enumerate(session.prompts, 1):
        ranges = ranges_for_prompt(session.document, p.id)
        where = ", ".join(f"[{s},{e})" for s, e, _ in ranges) or "not in text"
        lines.append(f"{i}. [{p.category.value}] {_prompt_text(p)} ({where})")

    t = _timeline_summary(session)
    lines += ["", "## Timeline", ""]
    lines.append(
        f"{t['writing']} writing unit(s), {t['edit_prompts']} edit prompt(s), "
        f"{t['generate_prompts']} generate prompt(s)."
    )
    return "\n".join(lines) + "\n"


def _render_html(session) -> str:
    stats = summarize(session.document, session.prompts)
    parts = [
        "<!DOCTYPE html><html><head><meta charset=\"utf-8\">",
        "<title>AI Assistance Disclosure</title></head><body>",
        "<h1>AI Assistance Disclosure</h1>",
        "<h2>Annotated text</h2><div class=\"annotated\">",
    ]
    for span in session.document.spans:
        piece = html_mod.escape(session.document.text[span.start:span.end]).replace("\n", "<br>")
        if span.label in HIGHLIGHT_COLORS:
            attrs = (
                f' style="background:{HIGHLIGHT_COLORS[span.label]}"'
                f' data-label="{span.label.value}" data-start="{span.start}" data-end="{span.end}"'
            )
            if span.prompt_link is not None:
                attrs += f' data-prompt="{html_mod.escape(span.prompt_link)}"'
            piece = f"<span{attrs}>{piece}</span>"
        parts.append(piece)
    parts.append("</div>")

    parts.append("<h2>Summary statistics</h2><table><tr><th>Origin</th>"
                 "<th>Characters</th><th>Words</th></tr>")
    for title, cf, wf in _stats_rows(stats):
        parts.append(f"<tr><td>{title}</td><td>{cf:.2%}</td><td>{wf:.2%}</td></tr>")
    parts.append("</table>")
    parts.append(
        f"<p>Prompts: {stats.prompt_counts['edit']} edit, "
        f"{stats.prompt_counts['generate']} generate.</p>"
    )

    parts.append("<h2>Prompts</h2><ol>")
    for p in session.prompts:
        ranges = ranges_for_prompt(session.document, p.id)
        where = ", ".join(f"[{s},{e})" for s, e, _ in ranges) or "not in text"
        parts.append(
            f"<li>[{p.category.value}] {html_mod.escape(_prompt_text(p))} ({where})</li>"
        )
    parts.append("</ol>")

    t = _timeline_summary(session)
    parts.append(
        f"<h2>Timeline</h2><p>{t['writing']} writing unit(s), "
        f"{t['edit_prompts']} edit prompt(s), {t['generate_prompts']} generate prompt(s).</p>"
    )
    parts.append("</body></html>")
    return "".join(parts)


def _render_structured(session) -> str:
    stats = summarize(session.document, session.prompts)
    doc = session.document
    data = {
        "text": doc.text,
        "spans": [
            {
                "start": s.start,
                "end": s.end,
                "label": s.label.value,
                **({"prompt_id": s.prompt_link} if s.prompt_link is not None else {}),
                "verbatim": s.verbatim,
            }
            for s in doc.spans
        ],
        "highlighted_regions": [
            {
                "start": s.start,
                "end": s.end,
                "label": s.label.value,
                **({"prompt_id": s.prompt_link} if s.prompt_link is not None else {}),
            }
            for s in doc.spans
            if s.label is not Label.HUMAN
        ],
        "stats": stats.to_dict(),
        "prompts": [
            {
                "id": p.id,
                "category": p.category.value,
                "prompt": _prompt_text(p),
                "response": _response_text(p),
                "redacted": p.redacted,
                "ranges": [
                    {"start": s, "end": e, "label": lab.value}
                    for s, e, lab in ranges_for_prompt(doc, p.id)
                ],
            }
            for p in session.prompts
        ],
        "timeline": _timeline_summary(session),
    }
    return json.dumps(data, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
