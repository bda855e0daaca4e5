"""Densest subgraphs under color-diversity constraints."""
from .errors import (ContractViolation, DdsgError, InfeasibleExtension, InfeasibleInstance,
                     InputError, ResourceExhausted, SolverError)
from .graph import ColoredGraph, Density, DiversityStats, Subset, build_graph, density, diversity_stats

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph", "ContractViolation", "DdsgError", "Density", "DiversityStats",
    "InfeasibleExtension", "InfeasibleInstance", "InputError", "ResourceExhausted",
    "SolverError", "Subset", "build_graph", "density", "diversity_stats",
]
