"""Odd colorings of graphs embedded on surfaces: exact search, structure
classification, discharging audits and reducible-configuration checks."""

from .coloring import Coloring, OddReport, is_odd_coloring, odd_color_set
from .embedding import RotationSystem, euler_characteristic, incidences, trace_faces
from .graph import Graph, degree_profile, encode_graph6, girth, parse_graph6
from .solver import SearchConfig, SolveResult, brute_force_odd_chromatic, odd_chromatic_number, solve_odd_coloring

__all__ = [
    "Coloring", "OddReport", "is_odd_coloring", "odd_color_set",
    "RotationSystem", "euler_characteristic", "incidences", "trace_faces",
    "Graph", "degree_profile", "encode_graph6", "girth", "parse_graph6",
    "SearchConfig", "SolveResult", "brute_force_odd_chromatic", "odd_chromatic_number",
    "solve_odd_coloring",
]
