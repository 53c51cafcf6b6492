"""Rendering: rounding rules, templates, charts, SVG determinism."""

import math

import pytest

from groupexplain import (
    DecisionHistory,
    TemplateCatalog,
    fairness_chart,
    histogram_chart,
    importance_chart,
    render_explanation,
    render_svg,
    spider_chart,
    tag_cloud,
)
from groupexplain.cf import HistogramCounts, RatingHistogram
from groupexplain.errors import (
    InsufficientAxesError,
    MissingSlotError,
    UnknownTemplateError,
    WeightOutOfRangeError,
)
from groupexplain.render import (
    display_round,
    display_trunc,
    fmt_num,
    format_slot,
    join_names,
)


class TestRounding:
    def test_half_away_from_zero(self):
        assert display_round(0.005) == 0.01
        assert display_round(2.675) == 2.68
        assert display_round(-0.005) == -0.01
        assert display_round(0.365) == 0.37

    def test_places(self):
        assert display_round(0.36666666, 4) == 0.3667
        assert display_round(0.375, 4) == 0.375

    def test_trunc_toward_zero(self):
        assert display_trunc(0.669) == 0.66
        assert display_trunc(-0.669) == -0.66
        assert display_trunc(0.9999) == 0.99

    def test_fmt_num(self):
        assert fmt_num(2.9) == "2.9"
        assert fmt_num(1.0) == "1.0"
        assert fmt_num(0.37) == "0.37"
        assert fmt_num(0.3) == "0.3"
        assert fmt_num(4.8) == "4.8"
        assert fmt_num(0.0) == "0.0"
        assert fmt_num(2.675) == "2.68"

    def test_join_names(self):
        assert join_names([]) == "none"
        assert join_names(["a"]) == "a"
        assert join_names(["a", "b"]) == "a and b"
        assert join_names(["a", "b", "c"]) == "a, b, and c"

    def test_format_slot(self):
        assert format_slot(True) == "y"
        assert format_slot(False) == "n"
        assert format_slot(7) == "7"
        assert format_slot(2.9) == "2.9"
        assert format_slot(["x", 2.5]) == "x and 2.5"
        assert format_slot([]) == "none"


class TestTemplates:
    def test_catalog_parsing(self):
        catalog = TemplateCatalog.from_text(
            "# comment\n\nplain: hello {name}\nwith-colon: a: b {x}\n"
        )
        assert catalog.ids() == ("plain", "with-colon")
        assert catalog.render("plain", {"name": "world"}) == "hello world"
        assert catalog.render("with-colon", {"x": 1}) == "a: b 1"

    def test_malformed_line(self):
        with pytest.raises(ValueError):
            TemplateCatalog.from_text("no-separator-here\n")

    def test_unknown_template(self):
        catalog = TemplateCatalog.from_text("a: b\n")
        with pytest.raises(UnknownTemplateError):
            catalog.render("zzz", {})
        with pytest.raises(UnknownTemplateError):
            catalog.resolve("zzz", "named")

    def test_missing_slot(self):
        catalog = TemplateCatalog.from_text("a: hello {name}\n")
        with pytest.raises(MissingSlotError):
            catalog.render("a", {})

    def test_slot_value_cannot_smuggle_markers(self):
        catalog = TemplateCatalog.from_text("a: hello {name}\n")
        with pytest.raises(MissingSlotError):
            catalog.render("a", {"name": "{oops}"})

    def test_privacy_variant_resolution(self):
        named = render_explanation(
            "content-based",
            "cb-category",
            "named",
            {"item": "t1", "category": "cat2"},
        )
        assert named.text == (
            "item t1 is recommended since each group member is "
            "interested in category cat2"
        )
        anonymous = render_explanation(
            "content-based",
            "cb-category",
            "anonymous",
            {"item": "t1", "category": "cat2"},
        )
        assert anonymous.text == (
            "item t1 is recommended since the group as a whole is "
            "interested in category cat2"
        )
        assert named.template_id == "cb-category-named"
        assert anonymous.template_id == "cb-category-anonymous"

    def test_bare_id_fallback(self):
        explanation = render_explanation(
            "content-based",
            "cb-tags",
            "anonymous",
            {"tags": ["beach"]},
        )
        assert explanation.template_id == "cb-tags"
        assert explanation.text == "this group values items tagged beach"

    def test_bad_privacy(self):
        with pytest.raises(ValueError):
            render_explanation("x", "cb-tags", "secret", {"tags": []})

    def test_no_marker_survives(self):
        explanation = render_explanation(
            "collaborative",
            "cf-nn-histogram",
            "named",
            {"item": "t1"},
        )
        assert "{" not in explanation.text


class TestCharts:
    def test_histogram_chart(self):
        histogram = RatingHistogram(
            item="t1", counts=HistogramCounts(0, 2, 4), source="member-neighbors"
        )
        chart = histogram_chart(histogram)
        assert chart.kind == "histogram"
        assert chart.series == (("bad", 0.0), ("neutral", 2.0), ("good", 4.0))
        assert chart.meta["item"] == "t1"

    def test_spider_chart_sorted(self):
        chart = spider_chart({"gp2": 2.9, "gp1": 4.2, "gp3": 3.1}, "t1")
        assert chart.kind == "spider"
        assert chart.series == (("gp1", 4.2), ("gp2", 2.9), ("gp3", 3.1))

    def test_spider_needs_three_axes(self):
        with pytest.raises(InsufficientAxesError):
            spider_chart({"gp1": 4.0, "gp2": 3.0}, "t1")

    def test_tag_cloud_scale(self):
        chart = tag_cloud({"a": 0.0, "b": 0.5, "c": 1.0})
        assert chart.series == (("a", 1.0), ("b", 2.0), ("c", 3.0))

    def test_tag_cloud_weight_range(self):
        with pytest.raises(WeightOutOfRangeError):
            tag_cloud({"a": 1.2})
        with pytest.raises(WeightOutOfRangeError):
            tag_cloud({"a": -0.1})

    def test_tag_cloud_annotations_follow_privacy(self):
        likes = {"a": ["u2", "u1"]}
        named = tag_cloud({"a": 0.5}, likes, privacy="named")
        assert named.meta["members"] == {"a": ("u1", "u2")}
        anonymous = tag_cloud({"a": 0.5}, likes, privacy="anonymous")
        assert "members" not in anonymous.meta

    def test_importance_chart_values(self):
        # group means of the three per-member importance columns
        importances = {
            "dim1": (0.1, 0.3, 0.1),
            "dim2": (0.6, 0.5, 0.3),
            "dim3": (0.3, 0.2, 0.6),
        }
        means = {d: math.fsum(v) / len(v) for d, v in importances.items()}
        chart = importance_chart(means)
        assert chart.kind == "bar"
        values = dict(chart.series)
        assert values["dim1"] == pytest.approx(0.16666666666666666)
        assert values["dim2"] == pytest.approx(0.46666666666666673)
        assert values["dim3"] == pytest.approx(0.3666666666666667)

    def test_fairness_chart(self):
        history = DecisionHistory(records={"u1": (2, 4), "u2": (3, 4), "u3": (4, 4)})
        chart = fairness_chart(history)
        assert chart.series == (("u1", 0.5), ("u2", 0.75), ("u3", 1.0))


class TestSvg:
    def test_deterministic(self):
        chart = spider_chart({"gp1": 4.2, "gp2": 2.9, "gp3": 3.1, "gp4": 4.4}, "t1")
        assert render_svg(chart) == render_svg(chart)

    def test_histogram_markup(self):
        histogram = RatingHistogram(
            item="t1", counts=HistogramCounts(1, 2, 3), source="member-neighbors"
        )
        text = render_svg(histogram_chart(histogram))
        assert text.startswith("<svg ")
        assert text.count("<rect ") == 3
        assert "good" in text

    def test_tag_cloud_font_scale(self):
        text = render_svg(tag_cloud({"beach": 1.0}))
        assert 'font-size="36.00"' in text  # 12 * (1 + 2*1.0)

    def test_label_escaping(self):
        from groupexplain.render import ChartData

        chart = ChartData(kind="bar", series=(("a<b", 1.0),), meta={})
        assert "a&lt;b" in render_svg(chart)

    def test_unknown_kind(self):
        from groupexplain.render import ChartData

        with pytest.raises(ValueError):
            render_svg(ChartData(kind="pie", series=(), meta={}))
