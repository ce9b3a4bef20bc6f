"""Exception hierarchy.

Every error carries a machine-readable ``code`` and the CLI exit status it
maps to: 1 for problems with the user's input, 2 for broken internal
invariants.
"""

from __future__ import annotations


class ArithJetError(Exception):
    code = "error"
    exit_code = 1


class InvalidInput(ArithJetError, ValueError):
    code = "invalid_input"


class NotDivisible(ArithJetError, ArithmeticError):
    code = "not_divisible"

    def __init__(self, divisor: int, witness: str, coefficient: int):
        self.divisor = divisor
        self.witness = witness
        self.coefficient = coefficient
        super().__init__(
            f"coefficient {coefficient} of monomial {witness} is not divisible by {divisor}"
        )


class ResourceLimit(ArithJetError):
    code = "resource_limit"


class ParseError(ArithJetError, ValueError):
    """Malformed polynomial text, with 1-based position and the expected tokens."""

    code = "syntax_error"

    def __init__(self, text: str, line: int, column: int, expected, found: str):
        self.text = text
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        self.found = found
        exp = ", ".join(self.expected)
        super().__init__(
            f"line {line}, column {column}: expected one of {exp}; found {found}"
        )


class InvalidSeries(ArithJetError, ValueError):
    code = "invalid_series"


class AmbientMismatch(ArithJetError, ValueError):
    code = "ambient_mismatch"


class MissingIntersectionNumber(ArithJetError, KeyError):
    code = "missing_intersection_number"

    def __init__(self, monomial: str):
        self.monomial = monomial
        super().__init__(monomial)

    def __str__(self) -> str:
        return f"intersection table has no entry for {self.monomial}"


class HypothesisViolation(ArithJetError, ValueError):
    code = "hypothesis_violation"


class InvariantViolation(ArithJetError, RuntimeError):
    """An internal identity failed. Always a bug, never bad input."""

    code = "invariant_violation"
    exit_code = 2
