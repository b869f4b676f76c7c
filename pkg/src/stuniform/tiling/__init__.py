from .disc import DEFAULT_MAX_RADIUS, DEFAULT_MAX_VERTICES, S_KIND, T_KIND, Disc, Vertex, generate_disc
from .stats import (
    CurvatureReport,
    SphereStats,
    area,
    curvature_report,
    degree_violations,
    local_rule_violations,
    picks_check,
    sphere_stats,
    y_count,
)

__all__ = [
    "DEFAULT_MAX_RADIUS",
    "DEFAULT_MAX_VERTICES",
    "S_KIND",
    "T_KIND",
    "CurvatureReport",
    "Disc",
    "SphereStats",
    "Vertex",
    "area",
    "curvature_report",
    "degree_violations",
    "local_rule_violations",
    "generate_disc",
    "picks_check",
    "sphere_stats",
    "y_count",
]
