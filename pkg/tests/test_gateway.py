import pytest

from textprov.errors import TransportError
from textprov.gateway import (
    CompletionParams,
    CompletionRequest,
    Gateway,
    LiveTransport,
    ScriptedTransport,
    SeededTransport,
    compose_message,
    suggested_interactions,
    transport_from_spec,
)


class TestCompletionRequest:
    def test_defaults(self):
        req = CompletionRequest("hello")
        assert req.params.max_tokens == 512
        assert req.params.temperature == 0.7

    def test_rejects_empty_prompt(self):
        with pytest.raises(ValueError):
            CompletionRequest("")

    def test_rejects_empty_context(self):
        with pytest.raises(ValueError):
            CompletionRequest("x", context_text="")

    def test_bad_params(self):
        with pytest.raises(ValueError):
            CompletionParams(max_tokens=0)
        with pytest.raises(ValueError):
            CompletionParams(temperature=-1)


class TestComposition:
    def test_prompt_only(self):
        assert compose_message(CompletionRequest("continue")) == "continue"

    def test_context_first_blank_line(self):
        req = CompletionRequest("continue", context_text="the old pier")
        assert compose_message(req) == "the old pier\n\ncontinue"

    def test_pure(self):
        req = CompletionRequest("a", context_text="b")
        assert compose_message(req) == compose_message(CompletionRequest("a", context_text="b"))


class TestScripted:
    def test_mapped_reply(self):
        gw = Gateway(ScriptedTransport({"continue the story": "The rain began."}))
        assert gw.complete(CompletionRequest("continue the story")) == "The rain began."

    def test_unknown_message_fails(self):
        gw = Gateway(ScriptedTransport({}))
        with pytest.raises(TransportError):
            gw.complete(CompletionRequest("anything"))

    def test_fixture_roundtrip(self, tmp_path):
        fixture = tmp_path / "mock.json"
        fixture.write_text('{"responses": {"hi": "hello"}, "default": "ok"}')
        transport = ScriptedTransport.from_fixture(fixture)
        assert transport.send("hi") == "hello"
        assert transport.send("other") == "ok"


class TestSeeded:
    def test_same_seed_same_reply(self):
        a, b = SeededTransport(7), SeededTransport(7)
        req = CompletionRequest("a stormy night")
        assert Gateway(a).complete(req) == Gateway(b).complete(req)

    def test_different_seed_differs(self):
        req = CompletionRequest("a stormy night")
        assert Gateway(SeededTransport(1)).complete(req) != \
            Gateway(SeededTransport(2)).complete(req)


class TestLive:
    def test_missing_credentials(self, monkeypatch):
        monkeypatch.delenv("LLM_ENDPOINT", raising=False)
        monkeypatch.delenv("LLM_API_KEY", raising=False)
        with pytest.raises(TransportError):
            LiveTransport()


class TestSuggestedInteractions:
    def test_exact_list(self):
        assert suggested_interactions() == \
            ["summarize", "elaborate", "enumerate", "introduce", "conclude"]

    def test_length(self):
        assert len(suggested_interactions()) == 5

    def test_lowercase_single_tokens(self):
        assert all(s == s.lower() and " " not in s for s in suggested_interactions())


class TestTransportSpec:
    def test_seeded(self):
        assert isinstance(transport_from_spec("seeded:3"), SeededTransport)

    def test_mock(self, tmp_path):
        fixture = tmp_path / "f.json"
        fixture.write_text('{"responses": {}}')
        assert isinstance(transport_from_spec(f"mock:{fixture}"), ScriptedTransport)

    def test_unknown(self):
        with pytest.raises(ValueError):
            transport_from_spec("telepathy")
