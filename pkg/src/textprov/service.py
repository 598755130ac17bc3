"""HTTP facade over the engine: session lifecycle, ops, prompts, reports.

One JSON file per session in the storage directory, in the export format;
the file is written durably before a mutation is acknowledged, so a restart
restores every acknowledged state. Requests within one session are
serialized; sessions are independent.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from . import session as sess
from .analytics import summarize
from .errors import (
    AlreadyRedacted,
    IntegrityError,
    ParseError,
    RevisionConflict,
    SchemaVersionUnsupported,
    TextprovError,
    UnknownPrompt,
    UnknownSession,
    UnsupportedFormat,
)
from .events import timeline_view
from .gateway import Gateway
from .policy import PolicyProfile, builtin_policies, check
from .report import render_disclosure

_STATUS = {
    UnknownSession: 404,
    UnknownPrompt: 404,
    RevisionConflict: 409,
    AlreadyRedacted: 409,
    ParseError: 400,
    SchemaVersionUnsupported: 400,
    IntegrityError: 400,
    UnsupportedFormat: 400,
}

_MEDIA_TYPES = {
    "markdown": "text/markdown; charset=utf-8",
    "html": "text/html; charset=utf-8",
    "structured": "application/json",
}


class SessionStore:
    """File-backed session store with per-session write serialization."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._cache: dict[str, sess.SessionState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._meta = threading.Lock()

    def _path(self, session_id: str) -> Path:
        if not session_id or "/" in session_id or session_id.startswith("."):
            raise UnknownSession(f"unknown session {session_id!r}")
        return self.directory / f"{session_id}.json"

    def lock(self, session_id: str) -> threading.Lock:
        with self._meta:
            return self._locks.setdefault(session_id, threading.Lock())

    def create(self) -> sess.SessionState:
        state = sess.new_session()
        self.save(state)
        return state

    def get(self, session_id: str) -> sess.SessionState:
        with self._meta:
            cached = self._cache.get(session_id)
        if cached is not None:
            return cached
        path = self._path(session_id)
        if not path.exists():
            raise UnknownSession(f"unknown session {session_id!r}")
        state = sess.import_session(path.read_bytes())  # replay-verified on load
        with self._meta:
            self._cache[session_id] = state
        return state

    def save(self, state: sess.SessionState) -> None:
        # write-ahead: the file hits disk before the caller acknowledges
        path = self._path(state.session_id)
        tmp = path.with_suffix(".tmp")
        data = sess.export_session(state)
        with open(tmp, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
        with self._meta:
            self._cache[state.session_id] = state

    def ids(self) -> list[str]:
        return sorted(p.stem for p in self.directory.glob("*.json"))


def render_report(state: sess.SessionState, format: str,
                  policy: Optional[PolicyProfile]) -> bytes:
    body = render_disclosure(state, format)
    if policy is None:
        return body
    conformance = check(state, policy)
    if format == "structured":
        data = json.loads(body)
        data["conformance"] = conformance.to_dict()
        return json.dumps(data, ensure_ascii=False, sort_keys=True,
                          separators=(",", ":")).encode("utf-8")
    lines = [f"{f.status.upper()}: {f.rule} - {f.detail}" for f in conformance.findings]
    if format == "markdown":
        extra = "\n## Conformance: " + policy.name + "\n\n" + \
                "\n".join(f"- {ln}" for ln in lines) + \
                f"\n\nOverall: **{conformance.overall}**\n"
        return body + extra.encode("utf-8")
    extra = ("<h2>Conformance: " + policy.name + "</h2><ul>" +
             "".join(f"<li>{ln}</li>" for ln in lines) +
             f"</ul><p>Overall: {conformance.overall}</p></body></html>")
    return body.replace(b"</body></html>", extra.encode("utf-8"))


def _policy_by_name(name: str) -> PolicyProfile:
    for p in builtin_policies():
        if p.name == name:
            return p
    raise UnsupportedFormat(f"unknown policy {name!r}")


def create_app(store_dir, gateway: Gateway) -> FastAPI:
    app = FastAPI(title="textprov")
    store = SessionStore(store_dir)
    app.state.store = store
    app.state.gateway = gateway

    @app.exception_handler(TextprovError)
    async def _handle(request: Request, exc: TextprovError):
        status = next((code for cls, code in _STATUS.items() if isinstance(exc, cls)), 400)
        return JSONResponse({"error": type(exc).__name__, "detail": str(exc)},
                            status_code=status)

    @app.post("/sessions")
    def create_session():
        state = store.create()
        return {"session_id": state.session_id, "revision": state.revision}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        state = store.get(session_id)
        return Response(sess.export_session(state), media_type="application/json")

    @app.post("/sessions/{session_id}/ops")
    async def post_op(session_id: str, request: Request):
        op = await request.json()
        with store.lock(session_id):
            state = store.get(session_id)
            state, revision = sess.apply_op(state, op)
            store.save(state)
        return {"revision": revision}

    @app.post("/sessions/{session_id}/prompts")
    async def post_prompt(session_id: str, request: Request):
        body = await request.json()
        with store.lock(session_id):
            state = store.get(session_id)
            state, record = sess.issue_prompt(
                state, gateway, body["prompt_text"], body.get("context_text"),
                expected_revision=body.get("expected_revision"),
            )
            store.save(state)
        return {"revision": state.revision, "prompt": sess._prompt_to_dict(record)}

    @app.post("/sessions/{session_id}/prompts/{prompt_id}/regenerate")
    async def post_regenerate(session_id: str, prompt_id: str, request: Request):
        body = await request.body()
        expected = json.loads(body).get("expected_revision") if body else None
        with store.lock(session_id):
            state = store.get(session_id)
            state, record = sess.regenerate(state, gateway, prompt_id,
                                            expected_revision=expected)
            store.save(state)
        return {"revision": state.revision, "prompt": sess._prompt_to_dict(record)}

    @app.post("/sessions/{session_id}/prompts/{prompt_id}/redact")
    async def post_redact(session_id: str, prompt_id: str, request: Request):
        body = await request.body()
        expected = json.loads(body).get("expected_revision") if body else None
        with store.lock(session_id):
            state = store.get(session_id)
            state, revision = sess.redact(state, prompt_id, expected_revision=expected)
            store.save(state)
        return {"revision": revision}

    @app.get("/sessions/{session_id}/stats")
    def get_stats(session_id: str):
        state = store.get(session_id)
        return summarize(state.document, state.prompts).to_dict()

    @app.get("/sessions/{session_id}/timeline")
    def get_timeline(session_id: str):
        state = store.get(session_id)
        return {"glyphs": [{"seq": g.seq, "category": g.category}
                           for g in timeline_view(state.log)]}

    @app.get("/sessions/{session_id}/report")
    def get_report(session_id: str, format: str = "markdown",
                   policy: Optional[str] = None):
        state = store.get(session_id)
        profile = _policy_by_name(policy) if policy else None
        body = render_report(state, format, profile)
        return Response(body, media_type=_MEDIA_TYPES.get(format, "text/plain"))

    @app.get("/sessions/{session_id}/export")
    def get_export(session_id: str):
        state = store.get(session_id)
        return Response(sess.export_session(state), media_type="application/json")

    @app.post("/sessions/import")
    async def post_import(request: Request):
        raw = await request.body()
        state = sess.import_session(raw)
        with store.lock(state.session_id):
            store.save(state)
        return {"session_id": state.session_id, "revision": state.revision}

    return app
