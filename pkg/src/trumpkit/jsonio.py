"""Wire formats: vector documents, reports, and certificates as JSON.

Rationals travel as "p/q" strings so nothing is lost in transit; every
certificate read back from disk can be re-verified exactly.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .core import MajorizationReport, ProbVec, normalize
from .errors import TrumpkitError
from .trumping import TrumpCertificate, trumps_with

__all__ = [
    "frac_str",
    "parse_component",
    "vector_to_json",
    "report_to_dict",
    "certificate_to_dict",
    "certificate_vectors_from_dict",
    "load_vector_document",
    "parse_vector_arg",
    "reverify_certificate_dict",
]


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_component(text: str) -> Fraction:
    """Accepts "p/q", decimal, or integer notation; always exact."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise TrumpkitError(f"cannot parse component {text!r}") from exc


def vector_to_json(v: ProbVec) -> list[str]:
    return [frac_str(c) for c in v.components]


def report_to_dict(report: MajorizationReport) -> dict:
    return {
        "verdict": report.verdict,
        "gaps": [frac_str(g) for g in report.prefix_gaps],
        "tight_indices": list(report.tight_indices),
    }


def certificate_to_dict(cert: TrumpCertificate) -> dict:
    return {
        "x": vector_to_json(cert.x),
        "y": vector_to_json(cert.y),
        "z": vector_to_json(cert.z),
        "report": report_to_dict(cert.report),
        "all_strict": cert.all_strict,
    }


def _vector_from_strings(parts, what: str) -> ProbVec:
    if not parts:
        raise TrumpkitError(f"{what} has no components")
    return ProbVec(tuple(parse_component(str(p)) for p in parts))


def certificate_vectors_from_dict(doc: dict) -> tuple[ProbVec, ProbVec, ProbVec]:
    """The (x, y, z) of a serialized certificate, parsed exactly."""
    try:
        return (
            _vector_from_strings(doc["x"], "x"),
            _vector_from_strings(doc["y"], "y"),
            _vector_from_strings(doc["z"], "z"),
        )
    except KeyError as exc:
        raise TrumpkitError(f"certificate document missing field {exc}") from exc


def reverify_certificate_dict(doc: dict) -> bool:
    """Re-run the exact comparison for a certificate read from disk."""
    x, y, z = certificate_vectors_from_dict(doc)
    return trumps_with(x, y, z) is not None


def load_vector_document(path: str, apply_normalize: bool = False) -> ProbVec:
    """Read {"name"?: str, "components": [str, ...]} from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TrumpkitError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "components" not in doc:
        raise TrumpkitError(f"{path}: expected an object with a 'components' list")
    comps = [parse_component(str(p)) for p in doc["components"]]
    if apply_normalize:
        return normalize(comps)
    return ProbVec(tuple(comps))


def parse_vector_arg(text: str, apply_normalize: bool = False) -> ProbVec:
    """Interpret a CLI vector argument: inline comma list or a JSON file path."""
    if text.endswith(".json") or os.path.exists(text):
        return load_vector_document(text, apply_normalize)
    parts = [p for p in text.split(",") if p.strip()]
    comps = [parse_component(p) for p in parts]
    if apply_normalize:
        return normalize(comps)
    return ProbVec(tuple(comps))
