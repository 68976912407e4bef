"""Project-specific errors
Created on: 19 Oct 2026
"""


class ConwaySkeinError(RuntimeError):
    pass


# diagrams
class DiagramError(ConwaySkeinError):
    pass


class DiagramParseError(DiagramError):
    pass


class DiagramSyntaxError(DiagramParseError):
    pass


class NonPlanarError(DiagramParseError):
    pass


class BadValenceError(DiagramParseError):
    pass


class InconsistentOrientationError(DiagramParseError):
    pass


class DisconnectedError(DiagramError):
    pass


class EdgeNotOnOuterFaceError(DiagramError):
    pass


class EmptySelectionError(DiagramError):
    pass


class MovePreconditionFailed(DiagramError):
    pass


class UnknownCrossingError(DiagramError):
    pass


# polynomials
class PolynomialError(ConwaySkeinError):
    pass


class NonUnitDivisorError(PolynomialError):
    pass


class UnboundVariableError(PolynomialError):
    pass


class ZeroSubstitutedForUnitError(PolynomialError):
    pass


class NonLaurentResultError(PolynomialError):
    pass


# algebras
class AlgebraError(ConwaySkeinError):
    pass


class UndefinedOperationError(AlgebraError):
    pass


class OutsideDomainError(UndefinedOperationError):
    pass


class CircleUndefinedError(AlgebraError):
    pass


class NoSuchGeneratorError(AlgebraError):
    pass


class UnknownAlgebraError(AlgebraError):
    pass


# evaluation
class EvaluationError(ConwaySkeinError):
    pass


class GeometricInsufficiencyError(EvaluationError):
    pass


class TooManyComponentsError(EvaluationError):
    pass


class TreeTooLargeError(EvaluationError):
    pass


class UnknownFormatError(EvaluationError):
    pass


# untangled reduction
class SimplifierError(ConwaySkeinError):
    pass


class NoFGonError(SimplifierError):
    pass


class NoTriangleError(SimplifierError):
    pass


class NotUntangledError(SimplifierError):
    pass


class ReductionStuckError(SimplifierError):
    pass


class ReductionClaimError(SimplifierError):
    pass
