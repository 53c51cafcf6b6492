"""Content-based explanations: category interest, tag statistics, opinions.

Relevance of a category to a group is the group-mean product of user and
item weights. Tag statistics follow the tagsplanation idea: a preference
(how much the user likes items carrying the tag) and a relevance (how
strongly the tag correlates with the user's ratings).
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from .core import Group, Item, RatingsMatrix, pearson
from .errors import (
    EmptyGroupError,
    InvalidValueError,
    MissingFeatureError,
    MissingWeightError,
    NoTaggedRatingsError,
)
from .render import PRIVACY_ANONYMOUS, PRIVACY_NAMED

#: user id -> category id -> interest weight in [0, 1]
UserCategoryWeights = Mapping[str, Mapping[str, float]]


def _user_weight(weights: UserCategoryWeights, user: str, category: str) -> float:
    per_user = weights.get(user)
    if per_user is None or category not in per_user:
        raise MissingWeightError(
            f"user {user!r} has no weight for category {category!r}"
        )
    return per_user[category]


def category_relevance(
    group: Group, weights: UserCategoryWeights, item: Item, category: str
) -> float:
    """Group-mean of userweight * itemweight for one category."""
    if category not in item.category_weights:
        raise MissingWeightError(
            f"item {item.id!r} has no weight for category {category!r}"
        )
    item_weight = item.category_weights[category]
    total = math.fsum(
        _user_weight(weights, member, category) * item_weight
        for member in group.members
    )
    return total / len(group.members)


def rank_categories(
    group: Group, weights: UserCategoryWeights, item: Item
) -> list[tuple[str, float]]:
    """All categories the item carries, by descending relevance, ties ascending."""
    ranked = [
        (category, category_relevance(group, weights, item, category))
        for category in sorted(item.category_weights)
    ]
    ranked.sort(key=lambda pair: (-pair[1], pair[0]))
    return ranked


class TagApplications:
    """Per-item tag application counts; shares are count / total."""

    def __init__(self, applications: Mapping[str, Mapping[str, int]]):
        self._counts: dict[str, dict[str, int]] = {}
        self._totals: dict[str, int] = {}
        for item, tags in applications.items():
            for tag, count in tags.items():
                if not isinstance(count, int) or count < 0:
                    raise InvalidValueError(
                        f"tag count for ({item!r}, {tag!r}) must be a non-negative int"
                    )
            self._counts[item] = dict(tags)
            self._totals[item] = sum(tags.values())

    def items(self) -> tuple[str, ...]:
        return tuple(sorted(self._counts))

    def tags(self) -> tuple[str, ...]:
        seen = {tag for tags in self._counts.values() for tag in tags}
        return tuple(sorted(seen))

    def has_tags(self, item: str) -> bool:
        return self._totals.get(item, 0) > 0

    def total(self, item: str) -> int:
        return self._totals.get(item, 0)

    def share(self, item: str, tag: str) -> float:
        """Fraction of the item's tag applications that used this tag."""
        total = self._totals.get(item, 0)
        if total == 0:
            return 0.0
        return self._counts[item].get(tag, 0) / total


def _tagged_rated_items(
    matrix: RatingsMatrix, tags: TagApplications, user: str
) -> list[str]:
    return sorted(i for i in matrix.items_rated_by(user) if tags.has_tags(i))


def tag_preference(
    matrix: RatingsMatrix, tags: TagApplications, user: str, tag: str
) -> float:
    """Rating-weighted mean tag share over the user's tagged rated items.

    sum(rating * share) / sum(rating); 0.0 when every rating is zero.
    """
    items = _tagged_rated_items(matrix, tags, user)
    if not items:
        raise NoTaggedRatingsError(f"user {user!r} rated no items carrying tags")
    row = matrix.items_rated_by(user)
    denominator = math.fsum(row[i] for i in items)
    if denominator == 0.0:
        return 0.0
    numerator = math.fsum(row[i] * tags.share(i, tag) for i in items)
    return numerator / denominator


def tag_relevance(
    matrix: RatingsMatrix, tags: TagApplications, user: str, tag: str
) -> float:
    """Pearson correlation between the user's ratings and the tag's shares."""
    items = _tagged_rated_items(matrix, tags, user)
    if len(items) < 2:
        raise NoTaggedRatingsError(
            f"user {user!r} rated fewer than two items carrying tags"
        )
    row = matrix.items_rated_by(user)
    return pearson([row[i] for i in items], [tags.share(i, tag) for i in items])


def group_tag_preference(
    matrix: RatingsMatrix, tags: TagApplications, group: Group, tag: str
) -> float:
    """Mean member tag preference."""
    total = math.fsum(
        tag_preference(matrix, tags, member, tag) for member in group.members
    )
    return total / len(group.members)


def group_tag_relevance(
    matrix: RatingsMatrix,
    tags: TagApplications,
    group: Group,
    tag: str,
    privacy: str = PRIVACY_NAMED,
) -> float:
    """Tag relevance lifted to the group.

    Named mode averages per-member relevances (aggregated predictions);
    anonymous mode correlates against a synthetic group rating row built
    from per-item member means (aggregated models).
    """
    if privacy == PRIVACY_ANONYMOUS:
        items = sorted(
            {
                item
                for member in group.members
                for item in matrix.items_rated_by(member)
                if tags.has_tags(item)
            }
        )
        if len(items) < 2:
            raise NoTaggedRatingsError(
                f"group {group.id!r} rated fewer than two items carrying tags"
            )
        group_row = []
        for item in items:
            ratings = [
                matrix.get(member, item)
                for member in group.members
                if matrix.get(member, item) is not None
            ]
            group_row.append(math.fsum(ratings) / len(ratings))
        return pearson(group_row, [tags.share(i, tag) for i in items])
    total = math.fsum(
        tag_relevance(matrix, tags, member, tag) for member in group.members
    )
    return total / len(group.members)


def opinion_relevance(
    profile: Mapping[str, float], item: Item, feature: str
) -> float:
    """Group sentiment times item sentiment for one feature."""
    if feature not in profile:
        raise MissingFeatureError(f"profile has no sentiment for feature {feature!r}")
    if feature not in item.feature_sentiments:
        raise MissingFeatureError(
            f"item {item.id!r} has no sentiment for feature {feature!r}"
        )
    return profile[feature] * item.feature_sentiments[feature]


def pros_cons(
    profile: Mapping[str, float], item: Item, threshold: float = 0.4
) -> tuple[list[tuple[str, float]], list[tuple[str, float]]]:
    """Partition the item's features into pros (relevance >= threshold) and cons.

    Both lists come back sorted by descending relevance, ties ascending.
    """
    pros: list[tuple[str, float]] = []
    cons: list[tuple[str, float]] = []
    for feature in sorted(item.feature_sentiments):
        relevance = opinion_relevance(profile, item, feature)
        (pros if relevance >= threshold else cons).append((feature, relevance))
    key = lambda pair: (-pair[1], pair[0])
    pros.sort(key=key)
    cons.sort(key=key)
    return pros, cons


def opinion_relevance_per_member(
    member_profiles: Mapping[str, Mapping[str, float]],
    item: Item,
    feature: str,
) -> float:
    """Mean over members of sentiment * item sentiment for one feature."""
    if not member_profiles:
        raise EmptyGroupError("no member sentiment profiles given")
    total = 0.0
    for member in sorted(member_profiles):
        profile = member_profiles[member]
        if feature not in profile:
            raise MissingFeatureError(
                f"member {member!r} has no sentiment for feature {feature!r}"
            )
        total += opinion_relevance(profile, item, feature)
    return total / len(member_profiles)
