"""Machine-checkable AI-writing policy profiles and conformance evaluation.

A profile encodes the checkable rules a venue publishes: an upper bound on
the AI-written share of the text, whether generative prompts must be listed,
whether AI text must be highlighted and linked, and whether AI influence must
be disclosed. Profiles are data, loadable from a JSON file, so new policies
need no code. Checking measures; it never blocks writing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .analytics import summarize
from .attribution import Label
from .classifier import PromptCategory

FRACTION_BASES = ("chars", "words")
FRACTION_SCOPES = ("ai_written", "ai_written+ai_influenced")


@dataclass(frozen=True)
class PolicyProfile:
    name: str
    max_ai_fraction: Optional[float] = None
    fraction_basis: str = "words"
    fraction_scope: str = "ai_written"
    require_generate_prompt_list: bool = False
    require_ai_highlighting: bool = False
    require_influence_disclosure: bool = False

    def __post_init__(self):
        if self.max_ai_fraction is not None and not (0 <= self.max_ai_fraction <= 1):
            raise ValueError("max_ai_fraction must be in [0,1]")
        if self.fraction_basis not in FRACTION_BASES:
            raise ValueError(f"fraction_basis must be one of {FRACTION_BASES}")
        if self.fraction_scope not in FRACTION_SCOPES:
            raise ValueError(f"fraction_scope must be one of {FRACTION_SCOPES}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "max_ai_fraction": self.max_ai_fraction,
            "fraction_basis": self.fraction_basis,
            "fraction_scope": self.fraction_scope,
            "require_generate_prompt_list": self.require_generate_prompt_list,
            "require_ai_highlighting": self.require_ai_highlighting,
            "require_influence_disclosure": self.require_influence_disclosure,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PolicyProfile":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__ if k in data})

    @classmethod
    def from_file(cls, path) -> "PolicyProfile":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def builtin_policies() -> list[PolicyProfile]:
    return [
        PolicyProfile(
            name="authors-guild",
            max_ai_fraction=0.05,
            fraction_basis="words",
            fraction_scope="ai_written",
        ),
        PolicyProfile(
            name="acm-style",
            require_generate_prompt_list=True,
        ),
        PolicyProfile(
            name="acl-style",
            require_influence_disclosure=True,
            require_ai_highlighting=True,
        ),
    ]


def get_policy(name: str) -> PolicyProfile:
    for p in builtin_policies():
        if p.name == name:
            return p
    raise KeyError(f"unknown policy {name!r}")


@dataclass(frozen=True)
class Finding:
    rule: str
    status: str  # pass | fail | info
    detail: str
    measured: Optional[float] = None

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "status": self.status, "detail": self.detail}
        if self.measured is not None:
            d["measured"] = self.measured
        return d


@dataclass(frozen=True)
class ConformanceReport:
    policy: str
    findings: tuple[Finding, ...]
    overall: str  # pass | fail

    def to_dict(self) -> dict:
        return {
            "policy": self.policy,
            "findings": [f.to_dict() for f in self.findings],
            "overall": self.overall,
        }


def check(session, policy: PolicyProfile, acknowledged=frozenset()) -> ConformanceReport:
    """Evaluate every enabled rule of the profile against a session snapshot.

    acknowledged: prompt ids the author has explicitly vouched for despite
    redaction (the prompt-list rule accepts those).
    """
    stats = summarize(session.document, session.prompts)
    findings: list[Finding] = []

    if policy.max_ai_fraction is not None:
        fractions = stats.word_fraction if policy.fraction_basis == "words" else stats.char_fraction
        measured = fractions[Label.AI_WRITTEN.value]
        if policy.fraction_scope == "ai_written+ai_influenced":
            measured += fractions[Label.AI_INFLUENCED.value]
        status = "fail" if measured > policy.max_ai_fraction else "pass"
        findings.append(Finding(
            "max_ai_fraction", status,
            f"AI share is {measured:.4f} of {policy.fraction_basis} "
            f"(limit {policy.max_ai_fraction}, scope {policy.fraction_scope})",
            measured=measured,
        ))

    if policy.require_generate_prompt_list:
        generate = [p for p in session.prompts if p.category is PromptCategory.GENERATE]
        if not generate:
            findings.append(Finding("generate_prompt_list", "info", "no generative prompts"))
        else:
            hidden = [p.id for p in generate if p.redacted and p.id not in acknowledged]
            if hidden:
                findings.append(Finding(
                    "generate_prompt_list", "fail",
                    f"generative prompts redacted without acknowledgment: {', '.join(hidden)}",
                ))
            else:
                findings.append(Finding(
                    "generate_prompt_list", "pass",
                    f"{len(generate)} generative prompt(s) disclosed",
                ))

    if policy.require_ai_highlighting:
        manual_ai = any(
            e.kind == "ManualLabel" and e.payload.get("label") == Label.AI_WRITTEN.value
            for e in session.log.events
        )
        unlinked = [
            (s.start, s.end) for s in session.document.spans
            if s.label is Label.AI_WRITTEN and s.prompt_link is None and not manual_ai
        ]
        if unlinked:
            findings.append(Finding(
                "ai_highlighting", "fail",
                f"AI-written ranges without a prompt link or manual label: {unlinked}",
            ))
        else:
            findings.append(Finding(
                "ai_highlighting", "pass", "all AI-written text is highlighted and traceable",
            ))

    if policy.require_influence_disclosure:
        influenced = stats.char_fraction[Label.AI_INFLUENCED.value]
        if influenced > 0:
            findings.append(Finding(
                "influence_disclosure", "info",
                f"AI-influenced text present ({influenced:.4f} of characters); disclose per policy",
                measured=influenced,
            ))
        else:
            findings.append(Finding("influence_disclosure", "pass", "no AI-influenced text"))

    overall = "fail" if any(f.status == "fail" for f in findings) else "pass"
    return ConformanceReport(policy.name, tuple(findings), overall)
