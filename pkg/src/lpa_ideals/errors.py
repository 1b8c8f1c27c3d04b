"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input/syntax problems exit 1,
mathematical precondition failures exit 2, internal law violations exit 3.
"""


class LpaError(Exception):
    """Base class for all package errors."""


class InputError(LpaError):
    """Malformed input: graph documents, expressions, polynomial text."""


class UnknownVertexError(InputError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex: {vertex!r}")
        self.vertex = vertex


class PreconditionError(LpaError):
    """A mathematically meaningful precondition does not hold."""


class GuardrailError(PreconditionError):
    """A complexity guardrail (vertex count, enumeration bound) was hit."""


class CanonicalFormError(PreconditionError):
    """Input does not denote a canonical ideal (e.g. cycle with an exit)."""


class InternalLawError(LpaError):
    """An identity guaranteed by the theory failed; signals a bug."""
