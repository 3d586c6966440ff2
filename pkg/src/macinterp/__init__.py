"""Exact interpolation Macdonald polynomials over Q(q,t,a)."""
from .exactalg import A, ONE, Q, T, ZERO, FieldElem, Point, XPoly, XRational, fe
from .families import FamilyTag, member
from .identities import REGISTRY, SweepConfig, run_identity, run_suite

__version__ = "0.1.0"

__all__ = ["A", "ONE", "Q", "T", "ZERO", "FieldElem", "Point", "XPoly", "XRational", "fe",
           "FamilyTag", "member", "REGISTRY", "SweepConfig", "run_identity", "run_suite"]
