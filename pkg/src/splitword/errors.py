"""Exception hierarchy shared by all modules."""


class SplitWordError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SplitWordError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSplit(SplitWordError):
    """The graph admits no clique/independent-set partition.

    ``kind`` is one of ``"2K2"``, ``"C4"``, ``"C5"`` and ``embedding`` maps the
    pattern vertices onto an induced copy in the host graph.
    """

    def __init__(self, kind, embedding):
        self.kind = kind
        self.embedding = embedding
        super().__init__(f"graph is not split: induced {kind} at {embedding}")


class InvalidPartition(SplitWordError):
    pass


class NotComparability(SplitWordError):
    """A split graph containing an induced B1, B2 or B3."""

    def __init__(self, name, embedding):
        self.name = name
        self.embedding = embedding
        super().__init__(f"graph is not a comparability graph: induced {name} at {embedding}")


class NotTransitive(SplitWordError):
    pass


class NotLabellable(SplitWordError):
    def __init__(self, vertex, labels):
        self.vertex = vertex
        self.labels = tuple(labels)
        super().__init__(
            f"neighbourhood of {vertex} has labels {sorted(self.labels)}, "
            "which is not a prefix, a suffix or a prefix plus a suffix"
        )


class PropertiesViolated(SplitWordError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("labelling violates: " + "; ".join(map(str, self.violations)))


class MissingVertex(SplitWordError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__(f"vertices absent from word: {self.missing}")


class CapExceeded(SplitWordError):
    pass


class TooLarge(SplitWordError):
    pass
