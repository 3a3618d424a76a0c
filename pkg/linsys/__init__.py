"""Линейные системы над Z_p: представление, разбор и классическое решение."""

from linsys.solver import (SolveResult, brute_force_solutions,
                           classical_solve, satisfies, solve_details)
from linsys.system import (BUNDLED, Assignment, LinearSystem, Support,
                           bundled_names, bundled_system, bundled_text,
                           load_system, parse_system, serialize_system,
                           support, system_hash)

__all__ = [
    "BUNDLED",
    "Assignment",
    "LinearSystem",
    "SolveResult",
    "Support",
    "brute_force_solutions",
    "bundled_names",
    "bundled_system",
    "bundled_text",
    "classical_solve",
    "load_system",
    "parse_system",
    "satisfies",
    "serialize_system",
    "solve_details",
    "support",
    "system_hash",
]
