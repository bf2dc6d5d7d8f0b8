"""Exception types shared across the package."""


class LieChainError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTypeError(LieChainError, ValueError):
    """A family/degree pair outside the constructible range (e.g. odd Sp degree)."""


class ParseError(LieChainError, ValueError):
    """Syntax error in a group-spec string; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TrivialGroupError(LieChainError, ValueError):
    """An operation that requires a nontrivial group was given the trivial one."""


class IncompleteDatabaseError(LieChainError, RuntimeError):
    """The brute-force recursion reached a group whose maximal-subgroup list
    is not certified complete; carries the offending group."""

    def __init__(self, group):
        super().__init__(f"maximal-subgroup list not certified complete for {group}")
        self.group = group
