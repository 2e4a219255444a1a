"""Scenario document parsing/emission and deterministic table output.

Scenario documents are JSON with a mandatory schema version key:

    {
      "caw_schema": 1,
      "technology":      {"lambda": 1.0, "k": 1.0, "g": 0.0},
      "ces":             {"A": 1.0, "alpha": 0.5, "beta": 0.5, "sigma": 2.0},
      "compute_supply":  {"scale": 1.0, "elasticity": 1.0},
      "compute_demand":  {"scale": 4.0, "elasticity": 1.0},
      "labor_demand_ts": {"scale": 10.0, "elasticity": 1.0},
      "labor_supply_ts": {"scale": 1.0, "elasticity": 1.0},
      "policy":          {"tau_c": 0.0, "mu": 1.0},
      "output_price": 1.0
    }

Only ``caw_schema`` and ``technology`` (with ``lambda`` and ``k``) are
required; every other key has the documented default shown above, so a
minimal document runs. ``compute_demand`` may be ``null`` for scenarios
whose only compute demand derives from agent labor (coupled mode). Unknown
keys are rejected rather than ignored.

Table output is deterministic byte for byte: CSV uses ``.`` decimals, no
thousands separators, headers on the first line, and metadata as trailing
``#``-prefixed comment lines sorted by key; floats carry 17 significant
digits so cross-implementation diffs are exact.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Mapping

from . import constants
from .errors import InvalidInput, ParseError, ValidationError
from .model import (
    CesParams,
    CurveKind,
    IsoElasticCurve,
    PolicyLevers,
    Scenario,
    Technology,
    validate_scenario,
)

SCHEMA_VERSION = 1

DEFAULT_CES = {"A": 1.0, "alpha": 0.5, "beta": 0.5, "sigma": 2.0}
DEFAULT_COMPUTE_SUPPLY = {"scale": 1.0, "elasticity": 1.0}
DEFAULT_COMPUTE_DEMAND = {"scale": 4.0, "elasticity": 1.0}
DEFAULT_LABOR_DEMAND = {"scale": 10.0, "elasticity": 1.0}
DEFAULT_LABOR_SUPPLY = {"scale": 1.0, "elasticity": 1.0}
DEFAULT_POLICY = {"tau_c": 0.0, "mu": 1.0}

_TOP_LEVEL_KEYS = (
    "caw_schema",
    "technology",
    "ces",
    "compute_supply",
    "compute_demand",
    "labor_demand_ts",
    "labor_supply_ts",
    "policy",
    "output_price",
)


def _as_number(value: Any, where: str) -> float:
    # bool is an int subclass; reject it explicitly.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _section(doc: Mapping[str, Any], key: str, known: tuple[str, ...]) -> dict[str, Any]:
    raw = doc[key]
    if not isinstance(raw, dict):
        raise ParseError(f"{key}: expected an object, got {type(raw).__name__}")
    unknown = sorted(set(raw) - set(known))
    if unknown:
        raise ParseError(f"{key}: unknown keys {unknown}")
    return raw


def _curve(raw: Mapping[str, Any], key: str, kind: CurveKind) -> IsoElasticCurve:
    return IsoElasticCurve(
        kind=kind,
        scale=_as_number(raw.get("scale"), f"{key}.scale"),
        elasticity=_as_number(raw.get("elasticity"), f"{key}.elasticity"),
    )


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document.

    Raises ParseError with key context for structural problems and
    ValidationError carrying every invariant violation at once.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"scenario document must be a JSON object, got {type(doc).__name__}")

    unknown = sorted(set(doc) - set(_TOP_LEVEL_KEYS))
    if unknown:
        raise ParseError(f"unknown top-level keys {unknown}")
    if "caw_schema" not in doc:
        raise ParseError("missing mandatory key 'caw_schema'")
    if doc["caw_schema"] != SCHEMA_VERSION:
        raise ParseError(f"unsupported caw_schema {doc['caw_schema']!r}; this tool reads version {SCHEMA_VERSION}")
    if "technology" not in doc:
        raise ParseError("missing mandatory key 'technology'")

    tech_raw = _section(doc, "technology", ("lambda", "k", "g"))
    for required in ("lambda", "k"):
        if required not in tech_raw:
            raise ParseError(f"technology: missing required key '{required}'")
    technology = Technology(
        lam=_as_number(tech_raw["lambda"], "technology.lambda"),
        k=_as_number(tech_raw["k"], "technology.k"),
        g=_as_number(tech_raw.get("g", 0.0), "technology.g"),
    )

    ces_raw = _section(doc, "ces", ("A", "alpha", "beta", "sigma")) if "ces" in doc else DEFAULT_CES
    ces = CesParams(
        A=_as_number(ces_raw.get("A", DEFAULT_CES["A"]), "ces.A"),
        alpha=_as_number(ces_raw.get("alpha", DEFAULT_CES["alpha"]), "ces.alpha"),
        beta=_as_number(ces_raw.get("beta", DEFAULT_CES["beta"]), "ces.beta"),
        sigma=_as_number(ces_raw.get("sigma", DEFAULT_CES["sigma"]), "ces.sigma"),
    )

    curve_keys = ("scale", "elasticity")
    supply_raw = (
        _section(doc, "compute_supply", curve_keys) if "compute_supply" in doc else DEFAULT_COMPUTE_SUPPLY
    )
    compute_supply = _curve(supply_raw, "compute_supply", CurveKind.SUPPLY)

    if "compute_demand" in doc and doc["compute_demand"] is None:
        compute_demand = None
    else:
        demand_raw = (
            _section(doc, "compute_demand", curve_keys) if "compute_demand" in doc else DEFAULT_COMPUTE_DEMAND
        )
        compute_demand = _curve(demand_raw, "compute_demand", CurveKind.DEMAND)

    labor_demand_raw = (
        _section(doc, "labor_demand_ts", curve_keys) if "labor_demand_ts" in doc else DEFAULT_LABOR_DEMAND
    )
    labor_demand = _curve(labor_demand_raw, "labor_demand_ts", CurveKind.DEMAND)

    labor_supply_raw = (
        _section(doc, "labor_supply_ts", curve_keys) if "labor_supply_ts" in doc else DEFAULT_LABOR_SUPPLY
    )
    labor_supply = _curve(labor_supply_raw, "labor_supply_ts", CurveKind.SUPPLY)

    policy_raw = _section(doc, "policy", ("tau_c", "mu")) if "policy" in doc else DEFAULT_POLICY
    policy = PolicyLevers(
        tau_c=_as_number(policy_raw.get("tau_c", 0.0), "policy.tau_c"),
        mu=_as_number(policy_raw.get("mu", 1.0), "policy.mu"),
    )

    output_price = _as_number(doc.get("output_price", 1.0), "output_price")

    scenario = Scenario(
        technology=technology,
        ces=ces,
        compute_supply=compute_supply,
        compute_demand_exogenous=compute_demand,
        labor_demand_ts=labor_demand,
        labor_supply_ts=labor_supply,
        policy=policy,
        output_price=output_price,
    )
    violations = validate_scenario(scenario)
    if violations:
        raise ValidationError(violations)
    return scenario


def _curve_doc(curve: IsoElasticCurve | None) -> dict[str, float] | None:
    if curve is None:
        return None
    return {"scale": curve.scale, "elasticity": curve.elasticity}


def emit_scenario(s: Scenario) -> str:
    """Canonical scenario document; parse(emit(s)) == s field for field."""
    doc = {
        "caw_schema": SCHEMA_VERSION,
        "technology": {"lambda": s.technology.lam, "k": s.technology.k, "g": s.technology.g},
        "ces": {"A": s.ces.A, "alpha": s.ces.alpha, "beta": s.ces.beta, "sigma": s.ces.sigma},
        "compute_supply": _curve_doc(s.compute_supply),
        "compute_demand": _curve_doc(s.compute_demand_exogenous),
        "labor_demand_ts": _curve_doc(s.labor_demand_ts),
        "labor_supply_ts": _curve_doc(s.labor_supply_ts),
        "policy": {"tau_c": s.policy.tau_c, "mu": s.policy.mu},
        "output_price": s.output_price,
    }
    return json.dumps(doc, indent=2) + "\n"


def scenario_sha256(s: Scenario) -> str:
    return hashlib.sha256(emit_scenario(s).encode("utf-8")).hexdigest()


def inputs_sha256(inputs: Mapping[str, Any]) -> str:
    """Digest for commands whose inputs are flags rather than a scenario file."""
    return hashlib.sha256(json.dumps(inputs, sort_keys=True).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class OutputTable:
    """Ordered tabular result with mandatory provenance metadata."""

    headers: tuple[str, ...]
    rows: tuple[tuple, ...]
    metadata: dict[str, Any]

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != len(self.headers):
                raise InvalidInput(
                    f"row {i} has {len(row)} cells for {len(self.headers)} headers"
                )
        if not self.metadata:
            raise InvalidInput("output tables must carry metadata")


def standard_metadata(source_sha256: str) -> dict[str, Any]:
    """Metadata block for every emitted table: version, input hash, tolerances."""
    meta: dict[str, Any] = {
        "caw_version": _tool_version(),
        "source_sha256": source_sha256,
    }
    for key, value in constants.tolerance_table().items():
        meta[f"tol_{key}"] = value
    return meta


def _tool_version() -> str:
    from . import __version__

    return __version__


def format_number(value: float) -> str:
    """17-significant-digit decimal form, always marked as a float."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    text = format(value, ".17g")
    if "." not in text and "e" not in text and "E" not in text:
        text += ".0"
    return text


def _cell_text(cell: Any) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, (int, float)):
        return format_number(cell)
    return str(cell)


def emit_table(t: OutputTable, format: str = "csv") -> str:
    """Render a table as CSV or as the structured (JSON) format.

    Both renderings are deterministic byte for byte for identical inputs:
    CSV appends metadata as sorted ``# key=value`` comment lines, the
    structured format nests metadata alongside the rows.
    """
    if format == "csv":
        lines = [",".join(t.headers)]
        for row in t.rows:
            lines.append(",".join(_escape_csv(_cell_text(c)) for c in row))
        for key in sorted(t.metadata):
            lines.append(f"# {key}={_cell_text(t.metadata[key])}")
        return "\n".join(lines) + "\n"
    if format in ("structured", "json"):
        doc = {
            "headers": list(t.headers),
            "rows": [[c if not isinstance(c, tuple) else list(c) for c in row] for row in t.rows],
            "metadata": {k: t.metadata[k] for k in sorted(t.metadata)},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise InvalidInput(f"unknown table format {format!r}")


def _escape_csv(text: str) -> str:
    if any(ch in text for ch in (",", '"', "\n")):
        return '"' + text.replace('"', '""') + '"'
    return text
