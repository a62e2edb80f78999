"""
Exception types shared across twistcheck
"""
from typing import Iterable, Optional, Tuple


class UsageError(Exception):
    """Raised when an operation is called with arguments it cannot accept"""


class ParseError(UsageError):
    """
    Raised by the expression lexer/parser.

    Attributes:
        offset: byte offset into the source text where the problem was found
        expected: sorted token names that would have been accepted there
    """

    def __init__(self, message: str, offset: int, expected: Iterable[str] = (), text: Optional[str] = None):
        self.offset = offset
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        self.text = text
        super().__init__(message)

    def diagnostic(self) -> str:
        """Message with a caret under the offending position"""
        lines = [f"{self.args[0]} at offset {self.offset}"]
        if self.expected:
            lines[0] += f" (expected one of: {', '.join(self.expected)})"
        if self.text is not None:
            lines.append(f"  {self.text}")
            lines.append("  " + " " * self.offset + "^")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.diagnostic()
