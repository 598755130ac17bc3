"""Command line entry points: serve the API, render reports, check policies,
verify replay-consistency, and move session files around."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import session as sess
from .errors import TextprovError
from .gateway import Gateway, transport_from_spec
from .policy import builtin_policies, PolicyProfile
from .service import create_app, render_report


def _load(path: str) -> sess.SessionState:
    return sess.import_session(Path(path).read_bytes())


def _policy(name_or_path: str) -> PolicyProfile:
    for p in builtin_policies():
        if p.name == name_or_path:
            return p
    if Path(name_or_path).exists():
        return PolicyProfile.from_file(name_or_path)
    raise click.ClickException(f"unknown policy {name_or_path!r} (not builtin, not a file)")


@click.group()
def main():
    """Provenance engine for AI-assisted writing."""


@main.command()
@click.option("--port", default=8040, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--store", default="./sessions", show_default=True,
              help="Directory holding one JSON file per session.")
@click.option("--transport", default="live", show_default=True,
              help="live, mock:FIXTURE, or seeded[:N].")
@click.option("--model", default="gpt-4", show_default=True)
def serve(port, host, store, transport, model):
    """Run the HTTP session service."""
    import uvicorn

    gateway = Gateway(transport_from_spec(transport), model_id=model)
    app = create_app(store, gateway)
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--format", default="markdown", show_default=True,
              type=click.Choice(["markdown", "html", "structured"]))
@click.option("--policy", default=None, help="Builtin policy name or profile file.")
@click.option("--output", "-o", type=click.Path(), default=None)
def report(file, format, policy, output):
    """Render the static disclosure report for a session file."""
    state = _load(file)
    body = render_report(state, format, _policy(policy) if policy else None)
    if output:
        Path(output).write_bytes(body)
    else:
        sys.stdout.buffer.write(body)


@main.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--policy", required=True, help="Builtin policy name or profile file.")
@click.option("--ack", multiple=True, help="Redacted prompt ids the author vouches for.")
def check(file, policy, ack):
    """Check a session against a policy; exit nonzero on failure."""
    from .policy import check as run_check

    state = _load(file)
    result = run_check(state, _policy(policy), acknowledged=frozenset(ack))
    for f in result.findings:
        line = f"{f.status.upper():5} {f.rule}: {f.detail}"
        click.echo(line)
    click.echo(f"overall: {result.overall}")
    if result.overall != "pass":
        sys.exit(1)


@main.command()
@click.argument("file", type=click.Path(exists=True))
def replay(file):
    """Verify that the session file's log replays to its stored document."""
    try:
        state = _load(file)  # import runs the replay check
    except TextprovError as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(1)
    click.echo(f"OK: {len(state.log.events)} events replay to the stored document "
               f"({len(state.document.text)} chars, revision {state.revision})")


@main.command("export")
@click.argument("file", type=click.Path(exists=True))
@click.option("--output", "-o", type=click.Path(), default=None)
def export_cmd(file, output):
    """Validate a session file and emit its canonical serialization."""
    data = sess.export_session(_load(file))
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


@main.command("import")
@click.argument("file", type=click.Path(exists=True))
@click.option("--store", default="./sessions", show_default=True)
def import_cmd(file, store):
    """Validate a session file and install it into a service store."""
    from .service import SessionStore

    state = _load(file)
    SessionStore(store).save(state)
    click.echo(state.session_id)


if __name__ == "__main__":
    main()
