"""Certifying circular-arc recognition by flipping interval models."""

from .aux import AuxGraph, build_aux_graph, dominance_pairs
from .configs import CATALOG, ConfigWitness, find_config, verify_witness
from .errors import ArcflipError, GuardExceeded, ParseError, PreconditionError
from .graph import Graph, load_graph
from .interval import CliquePath, IntervalModel
from .models import ArcModel, flip_to_arcs, flip_to_intervals, verify_arc_model, verify_sharp
from .pqtree import PQTree, build_pqtree, recognize_interval
from .recognizer import Certificate, recognize
from .star import check_star, star_to_sharp

__all__ = [
    "AuxGraph", "build_aux_graph", "dominance_pairs",
    "CATALOG", "ConfigWitness", "find_config", "verify_witness",
    "ArcflipError", "GuardExceeded", "ParseError", "PreconditionError",
    "Graph", "load_graph", "CliquePath", "IntervalModel",
    "ArcModel", "flip_to_arcs", "flip_to_intervals", "verify_arc_model", "verify_sharp",
    "PQTree", "build_pqtree", "recognize_interval",
    "Certificate", "recognize", "check_star", "star_to_sharp",
]
