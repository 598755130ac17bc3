from hypothesis import given, settings, strategies as st

from fuzz_harness import run_random_session
from textprov.analytics import summarize, word_labels
from textprov.attribution import AttributedDocument, Label, Span
from textprov.classifier import PromptCategory
from textprov.gateway import PromptRecord
from textprov import attribution as attr


def doc_with_ai(text, ai_end):
    spans = []
    if ai_end > 0:
        spans.append(Span(0, ai_end, Label.AI_WRITTEN, "p1", True))
    if ai_end < len(text):
        spans.append(Span(ai_end, len(text), Label.HUMAN))
    return AttributedDocument(text, tuple(spans))


def make_prompt(pid, category):
    return PromptRecord(pid, 0, "q", None, "r", category, "mock")


class TestWordLabels:
    def test_majority_per_word(self):
        # "good d" is AI: "good" all AI; "dog" is 1 AI + 2 human -> human
        doc = doc_with_ai("good dog", 6)
        assert [(rng, lab) for rng, lab in word_labels(doc)] == [
            ((0, 4), Label.AI_WRITTEN), ((5, 8), Label.HUMAN)]

    def test_all_human(self):
        doc = AttributedDocument("one two", (Span(0, 7, Label.HUMAN),))
        assert [lab for _, lab in word_labels(doc)] == [Label.HUMAN, Label.HUMAN]

    def test_even_split_is_human(self):
        doc = doc_with_ai("abcd", 2)
        assert word_labels(doc) == [((0, 4), Label.HUMAN)]


class TestSummarize:
    def test_char_fraction_fixture(self):
        stats = summarize(doc_with_ai("abcdefghij", 4))
        assert stats.char_fraction == {"human": 0.6, "ai_written": 0.4, "ai_influenced": 0.0}

    def test_empty_is_all_zero(self):
        stats = summarize(attr.new_document())
        assert set(stats.char_fraction.values()) == {0.0}
        assert set(stats.word_fraction.values()) == {0.0}
        assert stats.total_chars == 0 and stats.total_words == 0

    def test_prompt_counts(self):
        prompts = [make_prompt("p1", PromptCategory.EDIT),
                   make_prompt("p2", PromptCategory.EDIT),
                   make_prompt("p3", PromptCategory.GENERATE),
                   make_prompt("p4", PromptCategory.GENERATE),
                   make_prompt("p5", PromptCategory.GENERATE)]
        stats = summarize(attr.new_document(), prompts)
        assert stats.prompt_counts == {"edit": 2, "generate": 3}

    def test_monotone_under_paste(self):
        doc = AttributedDocument("human words here", (Span(0, 16, Label.HUMAN),))
        before = summarize(doc).char_fraction["ai_written"]
        pasted = attr.paste_ai_response(
            doc, 16, " and more", make_prompt("p1", PromptCategory.GENERATE))
        after = summarize(pasted).char_fraction["ai_written"]
        assert after > before

    def test_consistency_with_span_list(self):
        doc = doc_with_ai("abcdefghij", 7)
        ai_chars = sum(s.end - s.start for s in doc.spans if s.label is Label.AI_WRITTEN)
        assert summarize(doc).char_fraction["ai_written"] == ai_chars / len(doc.text)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_fractions_sum_to_one_on_fuzzed_sessions(seed):
    state, _, _ = run_random_session(seed, n_ops=25)
    stats = summarize(state.document, state.prompts)
    if state.document.text:
        assert abs(sum(stats.char_fraction.values()) - 1) < 1e-9
    if stats.total_words:
        assert abs(sum(stats.word_fraction.values()) - 1) < 1e-9
