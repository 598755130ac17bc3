"""Exception hierarchy shared by the engine modules."""


class TextprovError(Exception):
    """Base class for all engine errors."""


# --- document edits ---

class OutOfBounds(TextprovError):
    pass


class EmptyText(TextprovError):
    pass


class EmptyRange(TextprovError):
    pass


class InvalidLabel(TextprovError):
    pass


class UnknownPrompt(TextprovError):
    pass


# --- event log ---

class InvalidPayload(TextprovError):
    pass


class DanglingPromptRef(TextprovError):
    pass


class ReplayDivergence(TextprovError):
    pass


class AlreadyRedacted(TextprovError):
    pass


# --- classifier ---

class EmptyPrompt(TextprovError):
    pass


class Unparseable(TextprovError):
    pass


# --- gateway ---

class TransportError(TextprovError):
    pass


class ProviderRefusal(TransportError):
    pass


class Timeout(TransportError):
    pass


# --- sessions / persistence ---

class RevisionConflict(TextprovError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"expected revision {expected}, session is at {actual}")
        self.expected = expected
        self.actual = actual


class ParseError(TextprovError):
    pass


class SchemaVersionUnsupported(TextprovError):
    pass


class IntegrityError(TextprovError):
    pass


class UnsupportedFormat(TextprovError):
    pass


class UnknownSession(TextprovError):
    pass
