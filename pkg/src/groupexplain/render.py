"""Presentation layer: verbal templates, display rounding and chart data.

Templates live in a plain-text catalog (one ``template-id: text`` line
each); slot markers look like ``{slot}``. Charts are returned as neutral
ChartData records that the SVG backend (or any other frontend) can draw.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal
from importlib import resources
from types import MappingProxyType
from typing import TYPE_CHECKING, Mapping, Sequence

from .core import RATING_MAX
from .errors import (
    InsufficientAxesError,
    MissingSlotError,
    UnknownTemplateError,
    WeightOutOfRangeError,
)

if TYPE_CHECKING:  # pragma: no cover
    from .cf import RatingHistogram
    from .constraint import DecisionHistory

PRIVACY_NAMED = "named"
PRIVACY_ANONYMOUS = "anonymous"
PRIVACIES = (PRIVACY_NAMED, PRIVACY_ANONYMOUS)

_SLOT = re.compile(r"\{([a-z0-9_]+)\}")


def _snap(value: float) -> Decimal:
    # 12-decimal snap so binary noise (0.1*0.35 = 0.03499...96) cannot
    # straddle a rounding boundary; real data never needs that precision
    return Decimal(repr(round(value, 12)))


def display_round(value: float, places: int = 2) -> float:
    """Round for display, halves away from zero. Internal math never uses this."""
    quantum = Decimal(1).scaleb(-places)
    return float(_snap(value).quantize(quantum, rounding=ROUND_HALF_UP))


def display_trunc(value: float, places: int = 2) -> float:
    """Truncate toward zero, used only for critique support display (2/3 -> 0.66)."""
    quantum = Decimal(1).scaleb(-places)
    return float(_snap(value).quantize(quantum, rounding=ROUND_DOWN))


def fmt_num(value: float) -> str:
    """Format a number for verbal templates: 2 decimals, one trailing zero dropped."""
    text = f"{display_round(value):.2f}"
    if text.endswith("0") and not text.endswith(".00"):
        return text[:-1]
    if text.endswith(".00"):
        return text[:-1]
    return text


def join_names(names: Sequence[str]) -> str:
    names = list(names)
    if not names:
        return "none"
    if len(names) == 1:
        return names[0]
    if len(names) == 2:
        return f"{names[0]} and {names[1]}"
    return ", ".join(names[:-1]) + f", and {names[-1]}"


def format_slot(value: object) -> str:
    if isinstance(value, bool):
        return "y" if value else "n"
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt_num(value)
    if isinstance(value, (list, tuple)):
        return join_names([format_slot(v) for v in value])
    return str(value)


class TemplateCatalog:
    """Id -> template text, loaded from the packaged catalog or a user file."""

    def __init__(self, templates: Mapping[str, str]):
        self._templates = dict(templates)

    @classmethod
    def from_text(cls, text: str) -> "TemplateCatalog":
        templates: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ": " not in line:
                raise ValueError(f"catalog line {lineno} is not 'id: text'")
            template_id, body = line.split(": ", 1)
            templates[template_id.strip()] = body
        return cls(templates)

    @classmethod
    def from_path(cls, path) -> "TemplateCatalog":
        with open(path, encoding="utf-8") as handle:
            return cls.from_text(handle.read())

    def ids(self) -> tuple[str, ...]:
        return tuple(sorted(self._templates))

    def resolve(self, template_id: str, privacy: str) -> str:
        """Prefer the privacy-specific variant, fall back to the bare id."""
        candidate = f"{template_id}-{privacy}"
        if candidate in self._templates:
            return candidate
        if template_id in self._templates:
            return template_id
        raise UnknownTemplateError(f"no template {template_id!r} in catalog")

    def render(self, template_id: str, slots: Mapping[str, object]) -> str:
        if template_id not in self._templates:
            raise UnknownTemplateError(f"no template {template_id!r} in catalog")
        template = self._templates[template_id]
        text = template
        for marker in set(_SLOT.findall(template)):
            if marker not in slots:
                raise MissingSlotError(
                    f"template {template_id!r} needs slot {marker!r}"
                )
            text = text.replace("{" + marker + "}", format_slot(slots[marker]))
        leftover = _SLOT.search(text)
        if leftover:  # a slot value smuggled a marker in
            raise MissingSlotError(
                f"template {template_id!r} left marker {leftover.group(0)!r} unfilled"
            )
        return text


_default_catalog: TemplateCatalog | None = None


def default_catalog() -> TemplateCatalog:
    global _default_catalog
    if _default_catalog is None:
        text = (
            resources.files("groupexplain")
            .joinpath("templates/catalog.txt")
            .read_text(encoding="utf-8")
        )
        _default_catalog = TemplateCatalog.from_text(text)
    return _default_catalog


@dataclass(frozen=True)
class Explanation:
    """A rendered verbal explanation plus the payload it came from."""

    paradigm: str
    template_id: str
    privacy: str
    slots: Mapping[str, object]
    text: str


def render_explanation(
    paradigm: str,
    template_id: str,
    privacy: str,
    slots: Mapping[str, object],
    catalog: TemplateCatalog | None = None,
) -> Explanation:
    """Fill a catalog template and wrap the result.

    ``template_id`` may be a base id; the privacy-specific variant
    (``<id>-named`` / ``<id>-anonymous``) wins when the catalog has one.
    """
    if privacy not in PRIVACIES:
        raise ValueError(f"privacy must be one of {PRIVACIES}, got {privacy!r}")
    catalog = catalog or default_catalog()
    resolved = catalog.resolve(template_id, privacy)
    text = catalog.render(resolved, slots)
    return Explanation(
        paradigm=paradigm,
        template_id=resolved,
        privacy=privacy,
        slots=MappingProxyType(dict(slots)),
        text=text,
    )


@dataclass(frozen=True)
class ChartData:
    """Frontend-neutral chart: kind, (label, value) series, metadata."""

    kind: str
    series: tuple[tuple[str, float], ...]
    meta: Mapping[str, object] = field(default_factory=dict)


def histogram_chart(histogram: "RatingHistogram") -> ChartData:
    """Three bars (bad / neutral / good) for a rating histogram."""
    counts = histogram.counts
    return ChartData(
        kind="histogram",
        series=(
            ("bad", float(counts.bad)),
            ("neutral", float(counts.neutral)),
            ("good", float(counts.good)),
        ),
        meta={"item": histogram.item, "source": histogram.source},
    )


def spider_chart(group_ratings: Mapping[str, float], item: str) -> ChartData:
    """One axis per neighbor group; needs at least three axes to be drawable."""
    if len(group_ratings) < 3:
        raise InsufficientAxesError(
            f"spider chart needs >= 3 axes, got {len(group_ratings)}"
        )
    series = tuple((gid, float(group_ratings[gid])) for gid in sorted(group_ratings))
    return ChartData(
        kind="spider",
        series=series,
        meta={"item": item, "value-axis": "rating", "max": RATING_MAX},
    )


def tag_cloud(
    tag_weights: Mapping[str, float],
    member_likes: Mapping[str, Sequence[str]] | None = None,
    privacy: str = PRIVACY_NAMED,
) -> ChartData:
    """Tags sized by preference weight: font scale = 1 + 2 * weight.

    Member annotations survive only in named mode.
    """
    for tag, weight in tag_weights.items():
        if not 0.0 <= weight <= 1.0:
            raise WeightOutOfRangeError(f"tag {tag!r} weight {weight} outside [0, 1]")
    series = tuple(
        (tag, 1.0 + 2.0 * tag_weights[tag]) for tag in sorted(tag_weights)
    )
    meta: dict[str, object] = {"scale": "font", "weights": dict(sorted(tag_weights.items()))}
    if privacy == PRIVACY_NAMED and member_likes:
        meta["members"] = {
            tag: tuple(sorted(member_likes[tag])) for tag in sorted(member_likes)
        }
    return ChartData(kind="tag-cloud", series=series, meta=meta)


def importance_chart(dimension_values: Mapping[str, float]) -> ChartData:
    """One bar per interest dimension; values are the caller's group means."""
    series = tuple(
        (dim, float(dimension_values[dim])) for dim in sorted(dimension_values)
    )
    return ChartData(kind="bar", series=series, meta={"value-axis": "importance"})


def fairness_chart(history: "DecisionHistory") -> ChartData:
    """One bar per member with that member's fairness degree."""
    from .constraint import fairness_degree  # local import, no cycle

    series = tuple(
        (user, fairness_degree(history, user)) for user in sorted(history.users())
    )
    return ChartData(
        kind="bar",
        series=series,
        meta={"value-axis": "fairness", "max": 1.0},
    )
