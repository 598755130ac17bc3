import json
import re

import pytest

from textprov import session as sess
from textprov.attribution import ranges_for_prompt
from textprov.errors import UnsupportedFormat
from textprov.gateway import Gateway, ScriptedTransport
from textprov.report import REDACTION_MARKER, render_disclosure

RESPONSE = "The lighthouse keeper lit the lamp."


def make_gateway():
    return Gateway(ScriptedTransport(
        {"write the opening": RESPONSE}, default="Generate"), model_id="mock")


def clock():
    c = iter(range(1000, 100000))
    return c.__next__


def demo_session():
    tick = clock()
    state = sess.new_session("s-demo")
    gw = make_gateway()
    state, _ = sess.apply_op(state, {"kind": "insert_text", "pos": 0, "text": "Dawn. "},
                             clock=tick)
    state, record = sess.issue_prompt(state, gw, "write the opening", clock=tick)
    state, _ = sess.apply_op(state, {"kind": "paste_ai_response", "pos": 6,
                                     "text": RESPONSE, "prompt_id": record.id}, clock=tick)
    state, _ = sess.apply_op(state, {"kind": "manual_label", "start": 0, "end": 4,
                                     "label": "ai_influenced"}, clock=tick)
    return state, record


class TestMarkdown:
    def test_empty_session_has_zero_stats(self):
        body = render_disclosure(sess.new_session("s-empty"), "markdown").decode()
        assert "| Author-written | 0.00% | 0.00% |" in body
        assert "0 edit, 0 generate" in body

    def test_fences_match_spans(self):
        state, record = demo_session()
        body = render_disclosure(state, "markdown").decode()
        assert "⟦AI⟧" + RESPONSE + "⟦/AI⟧" in body
        assert "⟦INF⟧Dawn⟦/INF⟧" in body

    def test_deterministic(self):
        state, _ = demo_session()
        assert render_disclosure(state, "markdown") == render_disclosure(state, "markdown")


class TestHtml:
    def test_highlighted_regions_match_ranges(self):
        state, record = demo_session()
        body = render_disclosure(state, "html").decode()
        got = [(int(m.group(1)), int(m.group(2)))
               for m in re.finditer(r'data-start="(\d+)" data-end="(\d+)"'
                                    r' data-prompt="%s"' % record.id, body)]
        assert got == [(s, e) for s, e, _ in ranges_for_prompt(state.document, record.id)]
        assert len(got) == 1

    def test_colors(self):
        state, _ = demo_session()
        body = render_disclosure(state, "html").decode()
        assert "background:#F5A623" in body and "background:#7ED321" in body


class TestStructured:
    def test_roundtrip_fields(self):
        state, record = demo_session()
        data = json.loads(render_disclosure(state, "structured"))
        assert data["text"] == state.document.text
        assert data["stats"]["prompt_counts"] == {"edit": 0, "generate": 1}
        regions = [(r["start"], r["end"]) for r in data["highlighted_regions"]
                   if r.get("prompt_id") == record.id]
        assert regions == [(s, e) for s, e, _ in ranges_for_prompt(state.document, record.id)]

    def test_timeline_summary(self):
        state, _ = demo_session()
        data = json.loads(render_disclosure(state, "structured"))
        assert data["timeline"]["generate_prompts"] == 1
        assert data["timeline"]["writing"] == 1  # "Dawn. " completes one sentence


class TestRedaction:
    def test_marker_in_all_formats(self):
        state, record = demo_session()
        state, _ = sess.redact(state, record.id, clock=clock())
        for fmt in ("markdown", "html", "structured"):
            assert REDACTION_MARKER.encode() in render_disclosure(state, fmt)

    def test_counts_unchanged_by_redaction(self):
        state, record = demo_session()
        before = json.loads(render_disclosure(state, "structured"))["stats"]
        state, _ = sess.redact(state, record.id, clock=clock())
        after = json.loads(render_disclosure(state, "structured"))["stats"]
        assert before == after


def test_unknown_format():
    with pytest.raises(UnsupportedFormat):
        render_disclosure(sess.new_session("s"), "pdf")
