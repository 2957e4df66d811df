"""
Domain-specific exceptions.

These exceptions represent violated preconditions and exhausted budgets of the
analysis engines. They are independent of how the engines are driven (CLI or HTTP).
"""


class DomainError(Exception):
    """Base exception for all domain errors."""

    pass


class InvalidAlphabetError(DomainError):
    """Raised when an alphabet is empty, has duplicates or unprintable tokens."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid alphabet: {reason}")


class UnknownLetterError(DomainError):
    """Raised when a word uses a letter outside the alphabet it is checked against."""

    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"Letter '{letter}' is not in the alphabet")


class PresentationParseError(DomainError):
    """Raised when a graph file line does not follow the file format."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"Line {line_number}: {reason}")


class PresentationValidationError(DomainError):
    """Raised when a parsed presentation is structurally inconsistent."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid presentation: {reason}")


class EmptySubshiftError(DomainError):
    """Raised when essentialization removes every state."""

    def __init__(self) -> None:
        super().__init__("Graph presents the empty subshift")


class WordNotInLanguageError(DomainError):
    """Raised when an operation needs a word of the language and gets another one."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"Word '{word}' is not in the language")


class BudgetExceededError(DomainError):
    """Raised when a computation would exceed a configured budget."""

    def __init__(self, resource: str, requested: int, limit: int):
        self.resource = resource
        self.requested = requested
        self.limit = limit
        super().__init__(f"{resource} budget exceeded: requested {requested}, limit {limit}")


class ProfileBudgetExceededError(BudgetExceededError):
    """Raised when an extension profile would need too many membership calls."""

    def __init__(self, requested: int, limit: int):
        super().__init__("Profile", requested, limit)


class LengthCapExceededError(BudgetExceededError):
    """Raised when an exhaustive table is requested above the length cap."""

    def __init__(self, requested: int, limit: int):
        super().__init__("Word length", requested, limit)


class NodeBudgetExceededError(BudgetExceededError):
    """Raised when follower automaton exploration grows past its node budget."""

    def __init__(self, requested: int, limit: int):
        super().__init__("Automaton node", requested, limit)


class CutoffExceededError(BudgetExceededError):
    """Raised when an S-gap answer depends on gap values beyond the search cutoff."""

    def __init__(self, requested: int, limit: int):
        super().__init__("Gap search cutoff", requested, limit)


class PreconditionError(DomainError):
    """Raised when an operation is called outside its documented precondition."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Precondition violated: {reason}")


class ClosedFormPreconditionError(PreconditionError):
    """Raised when the interval closed form does not apply to the given word and seed."""

    pass


class WitnessPreconditionError(PreconditionError):
    """Raised when a witness construction is requested for an unsupported length."""

    pass


class SeparatorCollisionError(PreconditionError):
    """Raised when a coded-system separator already belongs to the base alphabet."""

    def __init__(self, separator: str):
        self.separator = separator
        super().__init__(f"separator '{separator}' already appears in the base alphabet")


class InvalidSGapSpecError(PreconditionError):
    """Raised when an S-gap specification admits no gap up to its cutoff."""

    pass


class EngineInconsistencyError(DomainError):
    """Raised when a mechanically re-verified conclusion does not hold."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Engine inconsistency: {reason}")
