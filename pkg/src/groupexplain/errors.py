"""Exception hierarchy. Every error carries a stable ``code`` string."""

from __future__ import annotations


class GroupExplainError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:  # "code: detail" reads well on a terminal
        return f"{self.code}: {self.message}"


class EmptyGroupError(GroupExplainError):
    code = "empty-group"


class RatingOutOfRangeError(GroupExplainError):
    code = "rating-out-of-range"


class DimensionMismatchError(GroupExplainError):
    code = "dimension-mismatch"


class DegenerateVarianceError(GroupExplainError):
    code = "degenerate-variance"


class UnknownUserError(GroupExplainError):
    code = "unknown-user"


class NoPredictionBasisError(GroupExplainError):
    code = "no-prediction-basis"


class MissingRatingError(GroupExplainError):
    code = "missing-rating"


class EmptyGroupSetError(GroupExplainError):
    code = "empty-group-set"


class MissingWeightError(GroupExplainError):
    code = "missing-weight"


class NoTaggedRatingsError(GroupExplainError):
    code = "no-tagged-ratings"


class MissingFeatureError(GroupExplainError):
    code = "missing-feature"


class MissingImportanceError(GroupExplainError):
    code = "missing-importance"


class MissingAttributeError(GroupExplainError):
    code = "missing-attribute"


class EmptyCatalogError(GroupExplainError):
    code = "empty-catalog"


class NoCritiquesError(GroupExplainError):
    code = "no-critiques"


class UnknownTemplateError(GroupExplainError):
    code = "unknown-template"


class MissingSlotError(GroupExplainError):
    code = "missing-slot"


class InsufficientAxesError(GroupExplainError):
    code = "insufficient-axes"


class WeightOutOfRangeError(GroupExplainError):
    code = "weight-out-of-range"


class MalformedDatasetError(GroupExplainError):
    code = "malformed-dataset"


class UnresolvedIdError(GroupExplainError):
    code = "unresolved-id"


class InvalidValueError(GroupExplainError):
    code = "invalid-value"


# Errors raised by dataset loading; the CLI maps these to exit status 3,
# everything else under GroupExplainError to 4.
DATASET_ERRORS = (MalformedDatasetError, UnresolvedIdError, InvalidValueError)
