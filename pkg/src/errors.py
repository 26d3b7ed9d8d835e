"""
Exception types raised by the board engine
"""


class BoardlessError(Exception):
    """Base class for engine errors"""


class IllegalMoveError(BoardlessError, ValueError):
    """A move that the current state or rules do not allow"""


class BoardBoundsError(IllegalMoveError):
    """A move outside the fixed board of the BASE strategy"""


class ReplayError(BoardlessError, RuntimeError):
    """A previously legal move could not be re-applied"""


class ConfigError(BoardlessError, ValueError):
    """Invalid game configuration or scenario request"""
