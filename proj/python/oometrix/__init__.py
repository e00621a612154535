"""Object-oriented software quality metrics.

Thin Python facade over the native analysis core. Models travel as
canonical model-JSON text; helpers here convert to and from dicts.
"""

import json as _json
import os as _os

from ._core import (
    ModelParseError,
    ValidationError,
    analyze_csv,
    analyze_json,
    compare_json,
    has_poor_class,
    kiviat_json,
    parse_to_model_json,
    recommendations_json,
)

__all__ = [
    "ModelParseError",
    "ValidationError",
    "analyze",
    "analyze_csv",
    "analyze_json",
    "compare",
    "compare_json",
    "has_poor_class",
    "kiviat",
    "kiviat_json",
    "parse_sources",
    "parse_to_model_json",
    "recommend",
    "recommendations_json",
]


_SOURCE_EXTENSIONS = (".minijava", ".java")


def parse_sources(paths):
    """Parse MiniOO source files or directories into a model dict."""
    files = []
    for path in paths:
        if _os.path.isdir(path):
            for root, _dirs, names in sorted(_os.walk(path)):
                files.extend(
                    _os.path.join(root, name)
                    for name in sorted(names)
                    if name.endswith(_SOURCE_EXTENSIONS)
                )
        else:
            files.append(path)
    return _json.loads(parse_to_model_json(files))


def analyze(model, thresholds_path="", baseline=None, **config):
    """Full metrics report for a model dict (or model-JSON string)."""
    baseline_json = "" if baseline is None else _as_json(baseline)
    return _json.loads(
        analyze_json(_as_json(model), thresholds_path, baseline_json, **config)
    )


def kiviat(model, class_name, thresholds_path=""):
    """Radar-chart data for one class of a model dict."""
    return _json.loads(kiviat_json(_as_json(model), class_name, thresholds_path))


def recommend(model, thresholds_path=""):
    """Threshold-driven recommendations for a model dict."""
    doc = _json.loads(recommendations_json(_as_json(model), thresholds_path))
    return doc["recommendations"]


def compare(old_model, new_model):
    """Version trend (deltas, SDI, tracking verdict) between two models."""
    return _json.loads(compare_json(_as_json(old_model), _as_json(new_model)))


def _as_json(model):
    if isinstance(model, str):
        return model
    return _json.dumps(model)
