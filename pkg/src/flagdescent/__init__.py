"""Galois descent of line bundles on partial flag schemes of classical groups over Z[1/2]."""

from .descent import (DescentVerdict, classify_line_bundles, cocycle_beta, conjugation_condition,
                      eval_char, extends_to, irr_partition, is_trivial_quadratic, verdict)
from .errors import DescentError, ParseError
from .exactnum import GaussianRational, parse_gaussian
from .forms import FAMILIES, StandardForm, parse_form
from .linalg import ExactMatrix
from .satake import MonomialAction, build_satake, dynkin_scheme, verify_w
from .weilres import ResCharacter, ResSatake, res_beta_trivial, res_dynkin

__all__ = [
    "DescentError", "DescentVerdict", "ExactMatrix", "FAMILIES", "GaussianRational",
    "MonomialAction", "ParseError", "ResCharacter", "ResSatake", "StandardForm",
    "build_satake", "classify_line_bundles", "cocycle_beta", "conjugation_condition",
    "dynkin_scheme", "eval_char", "extends_to", "irr_partition", "is_trivial_quadratic",
    "parse_form", "parse_gaussian", "res_beta_trivial", "res_dynkin", "verdict", "verify_w",
]

__version__ = "0.1.0"
