"""Skew constacyclic codes over F_q[u,v]/<f(u), g(v), uv - vu>.

Finite fields, the CRT-decomposed ring R, skew polynomials over both, code
constructions with duals and idempotents, Gray maps and shift operators, a
brute-force oracle, and a command-line front end.
"""
from .autom import Autom
from .codes import Code, ComponentCode, code_from_components, code_from_generator
from .config import JobConfig, load_config, load_example
from .errors import ConfigError, EnumerationLimitError, PreconditionError, SkewCodesError
from .gf import GF, FieldElement
from .gray import ShiftOp, apply_shift, gray_image_params, gray_weight, phi, phi_pi
from .oracle import CodewordSet, brute_dual, brute_min_distance, closure_check, enumerate_code
from .ring import Ring, RingElement
from .skewpoly import SkewPoly

__all__ = [
    "Autom",
    "Code",
    "CodewordSet",
    "ComponentCode",
    "ConfigError",
    "EnumerationLimitError",
    "FieldElement",
    "GF",
    "JobConfig",
    "PreconditionError",
    "Ring",
    "RingElement",
    "ShiftOp",
    "SkewCodesError",
    "SkewPoly",
    "apply_shift",
    "brute_dual",
    "brute_min_distance",
    "closure_check",
    "code_from_components",
    "code_from_generator",
    "enumerate_code",
    "gray_image_params",
    "gray_weight",
    "load_config",
    "load_example",
    "phi",
    "phi_pi",
]
