"""Errors raised by the engine. Everything a caller can trigger is a ValueError."""


class GTSpaceError(ValueError):
    pass


class DuplicatePoint(GTSpaceError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"Error: point '{point}' is listed more than once")


class UnknownPoint(GTSpaceError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"Error: '{point}' is not a point of the ground set")


class NotUnionClosed(GTSpaceError):
    """Two members of gamma whose union is missing. Sets are given as label lists."""

    def __init__(self, first, second, union):
        self.first = first
        self.second = second
        self.union = union
        super().__init__(
            "Error: family is not closed under union: "
            f"{_braces(first)} ∪ {_braces(second)} = {_braces(union)} is missing"
        )


class EmptyCarrier(GTSpaceError):
    def __init__(self, what="ground set"):
        super().__init__(f"Error: {what} must be nonempty")


class EmptyArgument(GTSpaceError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"Error: argument {name} must be a nonempty set")


class NotDisjoint(GTSpaceError):
    def __init__(self, first, second):
        super().__init__(f"Error: {first} and {second} must be disjoint")


class HypothesisViolated(GTSpaceError):
    def __init__(self, hypothesis):
        self.hypothesis = hypothesis
        super().__init__(f"Error: hypothesis '{hypothesis}' does not hold")


class ShrinkFailed(GTSpaceError):
    """No open E with P ⊆ E ⊆ cl(E) ⊆ G exists."""

    def __init__(self, inner, outer):
        self.inner = inner
        self.outer = outer
        super().__init__(f"Error: no sλ-open set shrinks between {inner} and {outer}")


class NotGDelta(GTSpaceError):
    def __init__(self, value):
        super().__init__(f"Error: {value} is not an sλGδ-set")


class TooLarge(GTSpaceError):
    def __init__(self, n, limit):
        super().__init__(f"Error: n={n} exceeds the enumeration limit ({limit})")


class UnknownProperty(GTSpaceError):
    def __init__(self, name, known):
        super().__init__(f"Error: unknown property '{name}' (known: {', '.join(known)})")


class SpaceSyntaxError(GTSpaceError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"Error: line {line}: {message}")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def _braces(labels):
    return "{" + ",".join(labels) + "}"
