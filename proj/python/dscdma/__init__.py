"""Outage probability and transmission capacity of DS-CDMA ad hoc networks."""

from ._core import (
    InfeasiblePacking,
    NumericalFailure,
    ParseError,
    conditional_outage,
    resolve_scenario,
    simulate_outage,
    spatial_average_outage,
    table1_csv,
    transmission_capacity,
)

__all__ = [
    "InfeasiblePacking",
    "NumericalFailure",
    "ParseError",
    "conditional_outage",
    "resolve_scenario",
    "simulate_outage",
    "spatial_average_outage",
    "table1_csv",
    "transmission_capacity",
]
