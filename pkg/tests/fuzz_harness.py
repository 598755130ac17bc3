"""Randomized session generator driving the engine and the brute-force
character model in lockstep. Shared by the property tests and the acceptance
suite; everything is seeded, so failures are reproducible."""

import random

from charmodel import CharDoc
from textprov import Gateway, ScriptedTransport
from textprov import session as sess

RESPONSE = "The storm rolled in over the harbor. Lanterns flickered along the pier."

ALPHABET = "abcde XY.!?\né日"  # includes multi-byte scalars and terminators

MAX_DOC = 400


def make_gateway():
    # unknown classification queries fail -> deterministic heuristic fallback
    transport = ScriptedTransport({}, default=RESPONSE)
    return Gateway(transport, model_id="mock")


def random_text(rng, max_len=8):
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(1, max_len)))


def random_range(rng, n):
    start = rng.randrange(n)
    end = rng.randint(start + 1, min(n, start + rng.randint(1, 20)))
    return start, end


def run_random_session(seed, n_ops=60, on_op=None):
    """Returns (final SessionState, CharDoc mirror, snapshots).

    snapshots: list of (event_count, document) taken after every applied op.
    on_op(state, mirror), when given, runs after every applied op.
    """
    rng = random.Random(seed)
    gateway = make_gateway()
    clock = iter(range(10_000_000)).__next__
    state = sess.new_session(f"fuzz-{seed}")
    mirror = CharDoc()
    snapshots = []

    prompt_texts = ["continue the scene", "rewrite the last line", "describe the pier",
                    "fix the grammar here", "add a closing image"]

    for _ in range(n_ops):
        n = len(state.document.text)
        choices = ["insert"]
        if n > 0:
            choices += ["delete", "replace", "label", "unlabel"]
        if n > MAX_DOC:
            choices = ["delete", "delete", "replace"]
        if state.prompts:
            choices.append("paste")
        else:
            choices.append("prompt")
        if rng.random() < 0.1:
            choices.append("prompt")
        op = rng.choice(choices)

        if op == "prompt":
            state, record = sess.issue_prompt(state, gateway, rng.choice(prompt_texts),
                                              clock=clock)
        elif op == "insert":
            pos, text = rng.randint(0, n), random_text(rng)
            state, _ = sess.apply_op(state, {"kind": "insert_text", "pos": pos, "text": text},
                                     clock=clock)
            mirror.insert(pos, text)
        elif op == "delete":
            start, end = random_range(rng, n)
            state, _ = sess.apply_op(state, {"kind": "delete_range", "start": start, "end": end},
                                     clock=clock)
            mirror.delete(start, end)
        elif op == "replace":
            start, end = random_range(rng, n)
            text = random_text(rng)
            state, _ = sess.apply_op(state, {"kind": "replace_range", "start": start,
                                             "end": end, "text": text}, clock=clock)
            mirror.replace(start, end, text)
        elif op == "paste":
            prompt = rng.choice(state.prompts)
            if rng.random() < 0.6:
                a = rng.randrange(len(RESPONSE))
                b = rng.randint(a + 1, min(len(RESPONSE), a + 30))
                text = RESPONSE[a:b]
            else:
                text = random_text(rng)
            pos = rng.randint(0, n)
            state, _ = sess.apply_op(state, {"kind": "paste_ai_response", "pos": pos,
                                             "text": text, "prompt_id": prompt.id},
                                     clock=clock)
            mirror.paste_ai(pos, text, prompt.id, RESPONSE)
        elif op == "label":
            start, end = random_range(rng, n)
            label = rng.choice(["ai_written", "ai_influenced"])
            link = rng.choice([None] + [p.id for p in state.prompts])
            payload = {"kind": "manual_label", "start": start, "end": end, "label": label}
            if link is not None:
                payload["prompt_id"] = link
            state, _ = sess.apply_op(state, payload, clock=clock)
            mirror.mark(start, end, label, link)
        elif op == "unlabel":
            start, end = random_range(rng, n)
            state, _ = sess.apply_op(state, {"kind": "manual_unlabel", "start": start,
                                             "end": end}, clock=clock)
            mirror.unmark(start, end)

        snapshots.append((len(state.log.events), state.document))
        if on_op is not None:
            on_op(state, mirror)

    return state, mirror, snapshots


def spans_as_tuples(doc):
    return [(s.start, s.end, s.label.value, s.prompt_link, s.verbatim) for s in doc.spans]
