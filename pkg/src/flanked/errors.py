"""Exception hierarchy shared by every module."""


class AutomatonError(ValueError):
    """Malformed input: unknown symbol, bad state id, mismatched alphabets."""


class PreconditionError(AutomatonError):
    """An operation was called outside its documented precondition."""


class ResourceError(RuntimeError):
    """A configured resource cap (e.g. the powerset class limit) was exceeded."""
