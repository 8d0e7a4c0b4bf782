"""Milnor mu-bar invariants of links, from diagrams and from surface intersection patterns."""

from importlib.resources import files

from .builder import Prescription, build_diagram, build_pattern, expected_mu_bar
from .diagram import (LinkDiagram, PDCodeError, from_braid, load_pd, longitude, mirror, parse_pd,
                      wirtinger)
from .milnor import InvalidIndexError, Residue, delta, linking_numbers, mu, mu_bar, triple
from .surfaces import (FingerMove, PatternError, SurfacePattern, classify, e_value, finger_move,
                       load_pattern, m_value, mu_bar_surface, normalize_type2, parse_pattern,
                       t_value, validate)
from .words import Letter, TruncatedSeries, Word, epsilon, epsilon_pair, magnus_coeff, magnus_expand

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a bundled example file, e.g. ``data_path("borromean.json")``."""
    return files(__name__) / "data" / name


__all__ = [
    "Prescription", "build_diagram", "build_pattern", "expected_mu_bar",
    "LinkDiagram", "PDCodeError", "from_braid", "load_pd", "longitude", "mirror", "parse_pd",
    "wirtinger",
    "InvalidIndexError", "Residue", "delta", "linking_numbers", "mu", "mu_bar", "triple",
    "FingerMove", "PatternError", "SurfacePattern", "classify", "e_value", "finger_move",
    "load_pattern", "m_value", "mu_bar_surface", "normalize_type2", "parse_pattern", "t_value",
    "validate",
    "Letter", "TruncatedSeries", "Word", "epsilon", "epsilon_pair", "magnus_coeff",
    "magnus_expand",
    "data_path",
]
