"""SINR of directional terminals in hexagonal tri-sector networks."""

from ._core import (
    AntennaPattern,
    ConfigError,
    DegenerateGeometry,
    Error,
    InvalidParameter,
    IoError,
    OutOfDomain,
    cdf,
    compare_fluid,
    compare_fluid_config,
    fluid_sinr_db,
    hex_site_count,
    quantile,
    run,
    shannon_throughput,
    simulate,
    site_positions,
)

__all__ = [
    "AntennaPattern",
    "ConfigError",
    "DegenerateGeometry",
    "Error",
    "InvalidParameter",
    "IoError",
    "OutOfDomain",
    "cdf",
    "compare_fluid",
    "compare_fluid_config",
    "fluid_sinr_db",
    "hex_site_count",
    "quantile",
    "run",
    "shannon_throughput",
    "simulate",
    "site_positions",
]
