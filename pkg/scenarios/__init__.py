"""Scenario files: parsing, validation and the bundled golden scenarios."""

from scenarios.loader import (
    bundled_names,
    load_bundled,
    load_scenario,
    parse_scenario,
    resolve_scenario,
    serialize_scenario,
    validate_scenario,
)

__all__ = [
    "parse_scenario",
    "validate_scenario",
    "serialize_scenario",
    "load_scenario",
    "load_bundled",
    "bundled_names",
    "resolve_scenario",
]
