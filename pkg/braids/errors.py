"""
Error hierarchy for the braid engine.

Commands map these onto exit codes, views onto HTTP 400 responses.
"""


class ParabraidError(Exception):
    """Base class of every engine error."""


class RingMismatch(ParabraidError):
    def __init__(self, left=None, right=None):
        self.left = left
        self.right = right
        super().__init__("ring mismatch")


class NonUnitalRing(ParabraidError):
    pass


class InvalidSystem(ParabraidError):
    """Bad family/rank, D over a noncommutative ring, or an A-only check on D."""


class NotARoot(ParabraidError):
    pass


class ParseError(ParabraidError):
    """
    Positioned syntax error.
    - offset: byte offset into the parsed text (None when unknown)
    - expected: sorted tuple of token descriptions that would have been accepted
    """

    def __init__(self, message, offset=None, expected=()):
        self.message = message
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        super().__init__(self.describe())

    def describe(self):
        text = self.message
        if self.offset is not None:
            text = f"{text} at offset {self.offset}"
        if self.expected:
            text = f"{text} (expected one of: {', '.join(self.expected)})"
        return text


class UnknownGenerator(ParseError):
    def __init__(self, token, offset=None):
        self.token = token
        super().__init__(f"unknown generator {token!r}", offset=offset)


class MalformedWord(ParabraidError):
    pass


class NotFound(ParabraidError):
    """Prover bounds exhausted. This is never a disproof."""

    def __init__(self, expanded, seen, max_steps, max_len):
        self.expanded = expanded
        self.seen = seen
        self.max_steps = max_steps
        self.max_len = max_len
        super().__init__(
            f"no derivation within bounds (expanded={expanded}, seen={seen}, "
            f"max_steps={max_steps}, max_len={max_len})"
        )


class ReplayError(ParabraidError):
    pass
