"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GameError):
    """A partition string contains a malformed token."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NotAPartition(GameError):
    """A part sequence is not non-increasing positive integers."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InvalidFamilyParam(GameError):
    """Family parameters outside their allowed range."""


class InvalidShape(GameError):
    """Row lengths handed to a closed-form solver are not sorted/positive."""


class EmptyBoard(GameError):
    """The empty diagram was used where Downright requires boxes."""


class BudgetExceeded(GameError):
    """An O(n) computation was asked to process more boxes than allowed."""


class IllegalMove(GameError):
    """A move that is not legal in the current position."""


class SessionFinished(GameError):
    """A move was submitted to a finished game session."""


class TerminalPosition(GameError):
    """Move advice was requested for a position with no moves."""


class StartIsTerminal(GameError):
    """Truncating a game whose start has no moves would leave no game."""
