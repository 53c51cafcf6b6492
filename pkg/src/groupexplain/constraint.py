"""Constraint-based explanations: requirements, MAUT dimensions, fairness.

Covers relevance of group requirements, causal relevance against a
catalog, utility dimensions, fairness bookkeeping over past decisions and
minimal relaxations when the requirements filter everything away.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Group, Item, satisfies
from .errors import (
    EmptyCatalogError,
    InvalidValueError,
    MissingAttributeError,
    MissingImportanceError,
    MissingWeightError,
    UnknownUserError,
)

# Exponential subset enumeration; anything bigger is a modelling smell.
MAX_RELAXATION_REQUIREMENTS = 20


@dataclass(frozen=True)
class Requirement:
    """A group requirement over one item attribute, e.g. price <= 250."""

    id: str
    attribute: str
    operator: str
    bound: object
    importance: Mapping[str, float]

    def matches(self, item: Item) -> bool:
        if self.attribute not in item.attributes:
            raise MissingAttributeError(
                f"item {item.id!r} lacks attribute {self.attribute!r}"
            )
        return satisfies(item.attributes[self.attribute], self.operator, self.bound)


@dataclass(frozen=True)
class InterestDimension:
    """A MAUT interest dimension with per-user importance weights."""

    id: str
    importance: Mapping[str, float]


@dataclass(frozen=True)
class DecisionHistory:
    """Per-user (supported, decisions) counts over past group choices."""

    records: Mapping[str, tuple[int, int]]

    def __post_init__(self):
        for user, (supported, decisions) in self.records.items():
            if decisions < 1:
                raise InvalidValueError(
                    f"user {user!r}: decision count must be positive"
                )
            if not 0 <= supported <= decisions:
                raise InvalidValueError(
                    f"user {user!r}: supported count {supported} outside [0, {decisions}]"
                )

    def users(self) -> tuple[str, ...]:
        return tuple(sorted(self.records))


def requirement_relevance(group: Group, requirement: Requirement) -> float:
    """Group-mean importance of one requirement."""
    for member in group.members:
        if member not in requirement.importance:
            raise MissingImportanceError(
                f"requirement {requirement.id!r} has no importance for {member!r}"
            )
    return math.fsum(
        requirement.importance[m] for m in group.members
    ) / len(group.members)


def causally_relevant(requirement: Requirement, items: Sequence[Item]) -> bool:
    """True when the requirement actually filters something out."""
    surviving = sum(1 for item in items if requirement.matches(item))
    return surviving < len(items)


def maut_relevance(group: Group, dimension: InterestDimension, item: Item) -> float:
    """Group-mean of importance * contribution for one interest dimension."""
    if dimension.id not in item.dimension_contributions:
        raise MissingWeightError(
            f"item {item.id!r} has no contribution for dimension {dimension.id!r}"
        )
    contribution = item.dimension_contributions[dimension.id]
    for member in group.members:
        if member not in dimension.importance:
            raise MissingWeightError(
                f"dimension {dimension.id!r} has no importance for {member!r}"
            )
    return math.fsum(
        dimension.importance[m] * contribution for m in group.members
    ) / len(group.members)


def fairness_degree(history: DecisionHistory, user: str) -> float:
    """Share of past decisions that supported the user."""
    if user not in history.records:
        raise UnknownUserError(f"user {user!r} has no decision history")
    supported, decisions = history.records[user]
    return supported / decisions


def adapt_weights(
    group: Group,
    weights: Mapping[str, Mapping[str, float]],
    history: DecisionHistory,
) -> dict[str, dict[str, float]]:
    """Scale each member's dimension weights by their fairness deficit.

    w'(u, d) = w(u, d) * (1 + (mean_fairness - fairness(u))). Members at
    the mean keep their weights; disadvantaged members gain.
    """
    fairness = {m: fairness_degree(history, m) for m in group.members}
    values = list(fairness.values())
    # mean of equal values is that value; avoids one-ulp drift breaking identity
    if max(values) == min(values):
        mean = values[0]
    else:
        mean = math.fsum(values) / len(values)
    adapted: dict[str, dict[str, float]] = {}
    for member in group.members:
        if member not in weights:
            raise MissingWeightError(f"no dimension weights for member {member!r}")
        factor = 1.0 + (mean - fairness[member])
        adapted[member] = {
            dim: w * factor for dim, w in weights[member].items()
        }
    return adapted


@dataclass(frozen=True)
class RelaxationProposal:
    """A subset-minimal set of requirements whose removal restores items."""

    removed: tuple[str, ...]
    survivors: tuple[str, ...]


def relaxation_proposals(
    requirements: Sequence[Requirement], items: Sequence[Item]
) -> list[RelaxationProposal]:
    """Subset-minimal removal sets that make the catalog non-empty again.

    Empty list when the requirements already admit an item. Proposals are
    ordered by cardinality, then lexicographically by removed ids.
    """
    if not items:
        raise EmptyCatalogError("item catalog is empty")
    if len(requirements) > MAX_RELAXATION_REQUIREMENTS:
        raise ValueError(
            f"relaxation enumeration capped at {MAX_RELAXATION_REQUIREMENTS} requirements"
        )
    by_id = {req.id: req for req in requirements}

    def survivors_without(removed: frozenset[str]) -> tuple[str, ...]:
        kept = [req for rid, req in by_id.items() if rid not in removed]
        return tuple(
            item.id for item in items if all(req.matches(item) for req in kept)
        )

    if survivors_without(frozenset()):
        return []
    ids = sorted(by_id)
    proposals: list[RelaxationProposal] = []
    for size in range(1, len(ids) + 1):
        for combo in itertools.combinations(ids, size):
            removed = frozenset(combo)
            if any(set(p.removed) <= removed for p in proposals):
                continue  # a smaller accepted set is contained: not minimal
            surviving = survivors_without(removed)
            if surviving:
                proposals.append(
                    RelaxationProposal(removed=combo, survivors=tuple(sorted(surviving)))
                )
    return proposals
