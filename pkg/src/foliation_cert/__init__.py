"""Exact certification of a degree-10 foliation leaving a smooth quartic
with two parallel bitangents as a leaf after blowing up its sixteen
singular points."""

__version__ = "0.1.0"

from .certificate import full_verify
from .foliation import QuarticInstance, build_foliation, degree_report, one_form

__all__ = ["QuarticInstance", "build_foliation", "degree_report", "full_verify", "one_form"]
