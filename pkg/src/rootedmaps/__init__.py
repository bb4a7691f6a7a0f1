"""Exact enumeration of rooted maps on orientable surfaces."""

from .asymptotics import SqrtPiScalar, asymptotic_ratio, tau, tau_from_rg, tg
from .bivariate_rational import BivariateRationalRecord, fit_pg, validate_pg
from .genus_series import GenusReport, GenusSeries, GenusSeriesRecord, r0, rg, rg_report, series_coefficients
from .oracle import census_bipartite, census_rooted_maps, verify_all, verify_tutte_hexa
from .recurrences import (
    RecurrenceEngine,
    genus_poly,
    hz,
    m_count,
    q_count,
    q_count_faces,
    q_poly,
    table_range,
)

__all__ = [
    "BivariateRationalRecord",
    "GenusReport",
    "GenusSeries",
    "GenusSeriesRecord",
    "RecurrenceEngine",
    "SqrtPiScalar",
    "asymptotic_ratio",
    "census_bipartite",
    "census_rooted_maps",
    "fit_pg",
    "genus_poly",
    "hz",
    "m_count",
    "q_count",
    "q_count_faces",
    "q_poly",
    "r0",
    "rg",
    "rg_report",
    "series_coefficients",
    "table_range",
    "tau",
    "tau_from_rg",
    "tg",
    "validate_pg",
    "verify_all",
    "verify_tutte_hexa",
]
