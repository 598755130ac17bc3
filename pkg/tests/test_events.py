import pytest

from textprov import events as ev
from textprov.attribution import Label
from textprov.errors import (
    AlreadyRedacted,
    DanglingPromptRef,
    InvalidPayload,
    ReplayDivergence,
    UnknownPrompt,
)


def log_with_prompt(pid="p1", category="generate"):
    return ev.append_event(ev.EventLog(), "PromptIssued",
                           {"prompt_id": pid, "category": category}, 1000)


class TestAppend:
    def test_first_seq_is_one(self):
        log = ev.append_event(ev.EventLog(), "HumanEdit",
                              {"op": "insert", "pos": 0, "text": "a"}, 123)
        assert [e.seq for e in log.events] == [1]

    def test_seq_ignores_timestamps(self):
        log = ev.append_event(ev.EventLog(), "HumanEdit",
                              {"op": "insert", "pos": 0, "text": "a"}, 999)
        log = ev.append_event(log, "HumanEdit",
                              {"op": "insert", "pos": 1, "text": "b"}, 1)
        assert [e.seq for e in log.events] == [1, 2]

    def test_dangling_paste_ref(self):
        with pytest.raises(DanglingPromptRef):
            ev.append_event(ev.EventLog(), "AiPaste",
                            {"pos": 0, "text": "x", "prompt_id": "p9", "verbatim": True}, 0)

    def test_invalid_payloads(self):
        with pytest.raises(InvalidPayload):
            ev.append_event(ev.EventLog(), "Nonsense", {}, 0)
        with pytest.raises(InvalidPayload):
            ev.append_event(ev.EventLog(), "HumanEdit", {"op": "insert"}, 0)
        with pytest.raises(InvalidPayload):
            ev.append_event(ev.EventLog(), "HumanEdit", {"op": "transmogrify"}, 0)

    def test_append_only(self):
        log = log_with_prompt()
        longer = ev.append_event(log, "SentenceCompleted", {}, 0)
        assert len(longer) == len(log) + 1
        assert longer.events[:1] == log.events


class TestSentenceCompletions:
    def test_single_terminator(self):
        assert ev.detect_sentence_completions("", "Hello world.", 0) == 1

    def test_three_terminators(self):
        assert ev.detect_sentence_completions("", "Hi! How? Ok.", 0) == 3

    def test_none(self):
        assert ev.detect_sentence_completions("ab", "abno terminator yet", 2) == 0

    def test_newline_counts(self):
        assert ev.detect_sentence_completions("xy", "x\n\ny", 1) == 2

    def test_only_inserted_text_counted(self):
        # surrounding old text has terminators; the insertion does not
        assert ev.detect_sentence_completions("a.b.", "a.zzb.", 2) == 0


class TestReplay:
    def test_empty(self):
        doc = ev.replay(())
        assert doc.text == "" and doc.spans == ()

    def test_human_then_paste(self):
        log = ev.append_event(ev.EventLog(), "HumanEdit",
                              {"op": "insert", "pos": 0, "text": "Hi."}, 0)
        log = ev.append_event(log, "PromptIssued", {"prompt_id": "p1", "category": "generate"}, 0)
        log = ev.append_event(log, "AiPaste",
                              {"pos": 3, "text": " Storm.", "prompt_id": "p1",
                               "verbatim": True}, 0)
        doc = ev.replay(log.events)
        assert doc.text == "Hi. Storm."
        assert [(s.start, s.end, s.label, s.prompt_link) for s in doc.spans] == [
            (0, 3, Label.HUMAN, None), (3, 10, Label.AI_WRITTEN, "p1")]

    def test_divergence_on_corrupt_log(self):
        bad = (ev.ProvenanceEvent(1, 0, "HumanEdit",
                                  {"op": "delete", "start": 0, "end": 5}),)
        with pytest.raises(ReplayDivergence):
            ev.replay(bad)

    def test_deterministic(self):
        log = ev.append_event(ev.EventLog(), "HumanEdit",
                              {"op": "insert", "pos": 0, "text": "abc."}, 77)
        assert ev.replay(log.events) == ev.replay(log.events)


class TestTimeline:
    def test_glyph_order_and_categories(self):
        log = ev.append_event(ev.EventLog(), "HumanEdit",
                              {"op": "insert", "pos": 0, "text": "One. Two."}, 0)
        log = ev.append_event(log, "SentenceCompleted", {}, 0)
        log = ev.append_event(log, "SentenceCompleted", {}, 0)
        log = ev.append_event(log, "PromptIssued", {"prompt_id": "p1", "category": "generate"}, 0)
        glyphs = ev.timeline_view(log)
        assert [g.category for g in glyphs] == ["Writing", "Writing", "PromptGenerate"]
        assert [g.seq for g in glyphs] == [2, 3, 4]

    def test_empty(self):
        assert ev.timeline_view(ev.EventLog()) == []

    def test_redacted_prompt_keeps_glyph(self):
        log = log_with_prompt("p1", "edit")
        log = ev.redact_prompt(log, "p1", 0)
        assert [g.category for g in ev.timeline_view(log)] == ["PromptEdit"]


class TestRedaction:
    def test_appends_event(self):
        log = ev.redact_prompt(log_with_prompt(), "p1", 5)
        assert log.events[-1].kind == "PromptRedacted"

    def test_unknown(self):
        with pytest.raises(UnknownPrompt):
            ev.redact_prompt(log_with_prompt(), "p9", 0)

    def test_twice(self):
        log = ev.redact_prompt(log_with_prompt(), "p1", 0)
        with pytest.raises(AlreadyRedacted):
            ev.redact_prompt(log, "p1", 0)
