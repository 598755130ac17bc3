"""Language-model gateway: completion calls behind a swappable transport.

Three transports: a live HTTP provider configured from environment variables,
a scripted mock driven by a fixture of message -> response pairs, and a seeded
synthetic generator for determinism tests. The whole engine test suite runs on
the non-live transports with no network access.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .classifier import PromptCategory
from .errors import ProviderRefusal, Timeout, TransportError

DEFAULT_MAX_TOKENS = 512
DEFAULT_TEMPERATURE = 0.7


@dataclass(frozen=True)
class CompletionParams:
    model_id: str = "default"
    max_tokens: int = DEFAULT_MAX_TOKENS
    temperature: float = DEFAULT_TEMPERATURE

    def __post_init__(self):
        if self.max_tokens <= 0:
            raise ValueError("max_tokens must be positive")
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative")


@dataclass(frozen=True)
class CompletionRequest:
    prompt_text: str
    context_text: Optional[str] = None
    params: CompletionParams = field(default_factory=CompletionParams)

    def __post_init__(self):
        if not self.prompt_text:
            raise ValueError("prompt_text must be non-empty")
        if self.context_text == "":
            raise ValueError("context_text, when present, must be non-empty")


@dataclass
class PromptRecord:
    """One prompt/context/response exchange, as shown on a prompt card."""
    id: str
    issued_at: int
    prompt_text: str
    context_text: Optional[str]
    response_text: str
    category: PromptCategory
    model_id: str
    regeneration_of: Optional[str] = None
    redacted: bool = False


def compose_message(request: CompletionRequest) -> str:
    """Fixed composition: context first, then the prompt, one blank line between."""
    if request.context_text is not None:
        return request.context_text + "\n\n" + request.prompt_text
    return request.prompt_text


def suggested_interactions() -> list[str]:
    """Standardized composition interactions offered by the prompt wizard."""
    return ["summarize", "elaborate", "enumerate", "introduce", "conclude"]


class ScriptedTransport:
    """Replies from a fixed message -> response table; unknown messages fail.

    Fixture file format (JSON): {"responses": {message: response}, "default": str?}
    A message with no context is just the prompt text, so fixtures usually key
    by prompt.
    """

    def __init__(self, responses: dict[str, str], default: Optional[str] = None):
        self.responses = dict(responses)
        self.default = default

    @classmethod
    def from_fixture(cls, path) -> "ScriptedTransport":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(data.get("responses", {}), data.get("default"))

    def send(self, message: str) -> str:
        if message in self.responses:
            return self.responses[message]
        if self.default is not None:
            return self.default
        raise TransportError(f"no scripted response for message {message[:80]!r}")


class SeededTransport:
    """Deterministic synthetic responses: same seed and message, same reply."""

    _WORDS = (
        "rain harbor lantern quiet ledger spruce amber drift chorus ember "
        "meadow signal velvet crossing anchor morning slate thistle copper tide"
    ).split()

    def __init__(self, seed: int = 0):
        self.seed = seed

    def send(self, message: str) -> str:
        digest = hashlib.sha256(f"{self.seed}:{message}".encode()).digest()
        words = [self._WORDS[b % len(self._WORDS)] for b in digest[:12]]
        return " ".join(words).capitalize() + "."


class LiveTransport:
    """OpenAI-style chat completion endpoint, configured from the environment."""

    def __init__(self, endpoint=None, api_key=None, model=None, timeout=30.0):
        self.endpoint = endpoint or os.environ.get("LLM_ENDPOINT")
        self.api_key = api_key or os.environ.get("LLM_API_KEY")
        self.model = model or os.environ.get("LLM_MODEL", "gpt-4")
        self.timeout = timeout
        if not self.endpoint or not self.api_key:
            raise TransportError("LLM_ENDPOINT and LLM_API_KEY must be set for the live transport")

    def send(self, message: str, max_tokens: int = DEFAULT_MAX_TOKENS,
             temperature: float = DEFAULT_TEMPERATURE) -> str:
        import httpx

        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": message}],
            "max_tokens": max_tokens,
            "temperature": temperature,
        }
        try:
            resp = httpx.post(
                self.endpoint,
                json=payload,
                headers={"Authorization": f"Bearer {self.api_key}"},
                timeout=self.timeout,
            )
        except httpx.TimeoutException as exc:
            raise Timeout(str(exc)) from exc
        except httpx.HTTPError as exc:
            raise TransportError(str(exc)) from exc
        if resp.status_code != 200:
            raise ProviderRefusal(f"provider returned {resp.status_code}: {resp.text[:200]}")
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, ValueError) as exc:
            raise ProviderRefusal(f"malformed provider payload: {exc}") from exc


class Gateway:
    """Completion calls for one provider, with a pluggable transport."""

    def __init__(self, transport, model_id: str = "default"):
        self.transport = transport
        self.model_id = model_id

    def complete(self, request: CompletionRequest) -> str:
        message = compose_message(request)
        if isinstance(self.transport, LiveTransport):
            return self.transport.send(
                message,
                max_tokens=request.params.max_tokens,
                temperature=request.params.temperature,
            )
        return self.transport.send(message)

    def send_raw(self, message: str) -> str:
        """One-shot message with default parameters (used by the classifier)."""
        return self.transport.send(message)


def transport_from_spec(spec: str):
    """Parse a CLI transport selector: "live", "mock:FIXTURE", or "seeded[:N]"."""
    if spec == "live":
        return LiveTransport()
    if spec.startswith("mock:"):
        return ScriptedTransport.from_fixture(spec[len("mock:"):])
    if spec == "seeded":
        return SeededTransport()
    if spec.startswith("seeded:"):
        return SeededTransport(int(spec[len("seeded:"):]))
    raise ValueError(f"unknown transport spec {spec!r}")
