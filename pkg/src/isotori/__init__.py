"""Flat isotropic tori in H^n: exact H-minimality certificates and numerical oracles."""

from .certify import Classification, classify
from .oracle import OracleParams
from .torus import TorusSpec, validate

__all__ = ["Classification", "OracleParams", "TorusSpec", "classify", "validate"]
__version__ = "0.1.0"
