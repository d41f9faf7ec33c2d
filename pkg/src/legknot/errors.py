"""Exception types shared across the package."""


class LegknotError(Exception):
    """Base class for all domain errors."""


class DiagramError(LegknotError):
    """A Gauss diagram violates a structural invariant."""


class UnpairedArrow(DiagramError):
    def __init__(self, arrow_id):
        self.arrow_id = arrow_id
        super().__init__(f"arrow {arrow_id} does not appear exactly once as head and once as tail")


class OddCuspCount(DiagramError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"cusp count {count} is odd; coorientation alternation forces an even count")


class BadMarkMultiplicity(DiagramError):
    def __init__(self, mark_id, count):
        self.mark_id = mark_id
        self.count = count
        super().__init__(f"singular mark {mark_id} appears {count} times, expected exactly 2")


class NonContiguousIds(DiagramError):
    def __init__(self, what, ids):
        self.what = what
        self.ids = sorted(ids)
        super().__init__(f"{what} ids {self.ids} are not 1..n without gaps")


class SingularNotAllowed(DiagramError):
    def __init__(self, op="operation"):
        super().__init__(f"{op} is not defined on diagrams with singular marks")


class IllegalMove(LegknotError):
    """A move instance does not apply to the given diagram in the given mode."""


class NonGenericInput(LegknotError):
    """Planar input has a tangency, triple point, or crossing at a vertex."""


class DegenerateSegment(LegknotError):
    """A polyline edge has zero length."""


class NoRoomForKink(LegknotError):
    """No segment of the strand can host a kink insertion."""


class NonOrientableDetected(LegknotError):
    """Band attachment data does not describe an orientable surface."""


class InsufficientBaseValues(LegknotError):
    """The invariant table does not cover the indices the recursion needs."""


class HypothesisNotEstablished(LegknotError):
    """The stabilized diagrams are not known to be equivalent."""


class BudgetZero(LegknotError):
    """A search budget field is not positive."""


class GaussSyntaxError(LegknotError):
    """A Gauss code string fails to parse.  Carries the offending position."""

    def __init__(self, position, message):
        self.position = position
        super().__init__(f"at position {position}: {message}")


class PlanarFileError(LegknotError):
    """A planar diagram file fails to load.  Carries line and column."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
