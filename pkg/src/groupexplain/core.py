"""Shared model: ratings, groups, aggregation, similarity and prediction.

Everything downstream (the four explanation paradigms, the renderer, the
CLI) builds on the types and functions in this module. All functions are
pure; the containers are treated as immutable after construction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateVarianceError,
    DimensionMismatchError,
    EmptyGroupError,
    InvalidValueError,
    NoPredictionBasisError,
    RatingOutOfRangeError,
    UnknownUserError,
)

RATING_MIN = 0.0
RATING_MAX = 5.0

# Bucket edges: bad = [0, 2], neutral = (2, 3.5], good = (3.5, 5].
BAD_UPPER = 2.0
NEUTRAL_UPPER = 3.5


class RatingBucket(enum.Enum):
    BAD = "bad"
    NEUTRAL = "neutral"
    GOOD = "good"


class AggregationStrategy(enum.Enum):
    """How a group score is derived from per-member scores."""

    AVG = "avg"
    LMS = "lms"
    MPL = "mpl"

    @classmethod
    def parse(cls, name: str) -> "AggregationStrategy":
        try:
            return cls(name.lower())
        except ValueError:
            raise InvalidValueError(f"unknown aggregation strategy {name!r}") from None


@dataclass(frozen=True)
class Group:
    id: str
    members: tuple[str, ...]

    def __post_init__(self):
        if not self.members:
            raise EmptyGroupError(f"group {self.id!r} has no members")
        if len(set(self.members)) != len(self.members):
            raise InvalidValueError(f"group {self.id!r} lists a member twice")


@dataclass(frozen=True)
class Item:
    """A catalog item plus the per-paradigm annotations attached to it.

    attributes hold raw values (price, resolution, ...); the three weight
    maps carry values in [0, 1] and may each be empty when a paradigm does
    not apply to the item.
    """

    id: str
    attributes: Mapping[str, object] = field(default_factory=dict)
    category_weights: Mapping[str, float] = field(default_factory=dict)
    feature_sentiments: Mapping[str, float] = field(default_factory=dict)
    dimension_contributions: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for label, weights in (
            ("category weight", self.category_weights),
            ("feature sentiment", self.feature_sentiments),
            ("dimension contribution", self.dimension_contributions),
        ):
            for key, value in weights.items():
                if not 0.0 <= value <= 1.0:
                    raise InvalidValueError(
                        f"item {self.id!r}: {label} {key!r} = {value} outside [0, 1]"
                    )


class RatingsMatrix:
    """Sparse user x item rating store on the fixed [0, 5] scale."""

    def __init__(self, ratings: Iterable[tuple[str, str, float]]):
        by_user: dict[str, dict[str, float]] = {}
        by_item: dict[str, dict[str, float]] = {}
        for user, item, value in ratings:
            value = float(value)
            if not RATING_MIN <= value <= RATING_MAX:
                raise RatingOutOfRangeError(
                    f"rating {value} by {user!r} for {item!r} outside [0, 5]"
                )
            row = by_user.setdefault(user, {})
            if item in row:
                raise InvalidValueError(f"duplicate rating for ({user!r}, {item!r})")
            row[item] = value
            by_item.setdefault(item, {})[user] = value
        self._by_user = by_user
        self._by_item = by_item

    def __len__(self) -> int:
        return sum(len(row) for row in self._by_user.values())

    def users(self) -> tuple[str, ...]:
        return tuple(sorted(self._by_user))

    def items(self) -> tuple[str, ...]:
        return tuple(sorted(self._by_item))

    def has_user(self, user: str) -> bool:
        return user in self._by_user

    def get(self, user: str, item: str) -> float | None:
        return self._by_user.get(user, {}).get(item)

    def items_rated_by(self, user: str) -> Mapping[str, float]:
        return MappingProxyType(self._by_user.get(user, {}))

    def users_who_rated(self, item: str) -> Mapping[str, float]:
        return MappingProxyType(self._by_item.get(item, {}))

    def user_mean(self, user: str) -> float:
        row = self._by_user.get(user)
        if not row:
            raise UnknownUserError(f"no ratings for user {user!r}")
        return math.fsum(row.values()) / len(row)

    def co_rated(self, a: str, b: str) -> tuple[str, ...]:
        """Items rated by both users, ascending."""
        row_a = self._by_user.get(a, {})
        row_b = self._by_user.get(b, {})
        return tuple(sorted(row_a.keys() & row_b.keys()))

    def without_item(self, item: str) -> "RatingsMatrix":
        """A copy with every rating of *item* removed."""
        return RatingsMatrix(
            (u, i, r)
            for u, row in self._by_user.items()
            for i, r in row.items()
            if i != item
        )


def categorize_rating(rating: float) -> RatingBucket:
    """Place a rating into the bad / neutral / good bucket."""
    if not RATING_MIN <= rating <= RATING_MAX:
        raise RatingOutOfRangeError(f"rating {rating} outside [0, 5]")
    if rating <= BAD_UPPER:
        return RatingBucket.BAD
    if rating <= NEUTRAL_UPPER:
        return RatingBucket.NEUTRAL
    return RatingBucket.GOOD


def aggregate(
    scores: Mapping[str, float], strategy: AggregationStrategy
) -> tuple[float, tuple[str, ...]]:
    """Collapse per-member scores into one group score.

    Returns the score plus the contributing members, ascending by id:
    everyone for AVG, the members attaining the minimum for LMS, the
    maximum for MPL.
    """
    if not scores:
        raise EmptyGroupError("cannot aggregate an empty score map")
    if strategy is AggregationStrategy.AVG:
        value = math.fsum(scores.values()) / len(scores)
        return value, tuple(sorted(scores))
    extremum = min(scores.values()) if strategy is AggregationStrategy.LMS else max(scores.values())
    contributors = tuple(sorted(u for u, s in scores.items() if s == extremum))
    return extremum, contributors


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of two equal-length samples.

    Raises dimension-mismatch below two paired points and
    degenerate-variance when either side is constant.
    """
    if len(x) != len(y):
        raise DimensionMismatchError(f"sample sizes differ: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise DimensionMismatchError("need at least two paired points")
    mx = math.fsum(x) / len(x)
    my = math.fsum(y) / len(y)
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateVarianceError("a sample with zero variance has no correlation")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    return sxy / math.sqrt(sxx * syy)


def knn_neighbors(
    matrix: RatingsMatrix, user: str, k: int = 2
) -> list[tuple[str, float]]:
    """The k most similar users, as (user, similarity) pairs.

    Candidates need at least two co-rated items with *user*; pairs with
    degenerate variance get similarity 0.0 and stay eligible. Sorted by
    similarity descending, ties by ascending user id.
    """
    if not matrix.has_user(user):
        raise UnknownUserError(f"user {user!r} has no ratings")
    if k < 1:
        raise ValueError("k must be at least 1")
    scored: list[tuple[str, float]] = []
    own = matrix.items_rated_by(user)
    for other in matrix.users():
        if other == user:
            continue
        common = matrix.co_rated(user, other)
        if len(common) < 2:
            continue
        other_row = matrix.items_rated_by(other)
        try:
            sim = pearson([own[i] for i in common], [other_row[i] for i in common])
        except DegenerateVarianceError:
            sim = 0.0
        scored.append((other, sim))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]


def predict_rating(matrix: RatingsMatrix, user: str, item: str, k: int = 2) -> float:
    """Mean-centered weighted kNN prediction, clamped to the rating scale.

    prediction = mean(user) + sum(sim * (r_neighbor - mean(neighbor)))
                            / sum(|sim|)
    over the k nearest neighbors that rated the item. With no such
    neighbor there is no basis; with all-zero similarity weights the
    deviation term is 0.
    """
    neighbors = knn_neighbors(matrix, user, k)
    raters = [(v, sim) for v, sim in neighbors if matrix.get(v, item) is not None]
    if not raters:
        raise NoPredictionBasisError(
            f"no neighbor of {user!r} rated item {item!r}"
        )
    numerator = math.fsum(
        sim * (matrix.get(v, item) - matrix.user_mean(v)) for v, sim in raters
    )
    denominator = math.fsum(abs(sim) for _, sim in raters)
    deviation = numerator / denominator if denominator > 0.0 else 0.0
    return min(RATING_MAX, max(RATING_MIN, matrix.user_mean(user) + deviation))


#: Comparison operators usable in requirements and critiques.
OPERATORS = ("<=", ">=", "=")


def satisfies(value: object, operator: str, bound: object) -> bool:
    """Evaluate ``value <operator> bound`` for requirement/critique checks."""
    if operator == "=":
        return value == bound
    if operator not in OPERATORS:
        raise ValueError(f"unknown operator {operator!r}")
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InvalidValueError(
            f"operator {operator!r} needs a numeric value, got {value!r}"
        )
    if operator == "<=":
        return value <= bound  # type: ignore[operator]
    return value >= bound  # type: ignore[operator]
