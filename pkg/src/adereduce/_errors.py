class AdeError(Exception):
    """Raised for invalid input and for internal consistency failures, such
    as an unknown type label, a non-monic discriminant input or a flat whose
    root set does not close up."""

    def __init__(self, subject: object, reason: str) -> None:
        #: The type label, polynomial or argument the error is about
        self.subject: str = str(subject)
        #: Human readable description of what went wrong
        self.reason: str = reason
        super().__init__(self.subject, reason)

    def __repr__(self):
        return f"AdeError({self.subject!r}, {self.reason!r})"

    def __str__(self):
        return f"{self.subject}: {self.reason}"


class Unsupported:
    """Returned instead of a result when the data exists but is not computed
    here, for example the tails of D and E singularities. Always false in a
    boolean context, so callers can write ``if tail: ...``."""

    def __init__(self, subject: object, marker: str) -> None:
        #: What was asked for
        self.subject: str = str(subject)
        #: Always False
        self.ok: bool = False
        #: Where to look instead
        self.marker: str = marker

    def __repr__(self):
        return f"Unsupported({self.subject!r}, {self.marker!r})"

    def __str__(self):
        return f"{self.subject}: unsupported: {self.marker}"

    def __bool__(self):
        return self.ok

    def __eq__(self, other):
        return (
            isinstance(other, Unsupported)
            and (self.subject, self.marker) == (other.subject, other.marker)
        )

    def __hash__(self):
        return hash((self.subject, self.marker))
