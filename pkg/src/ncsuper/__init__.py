"""Exact symbolic engine for Z2-graded noncommutative algebras.

Verifies the differential geometry of the super-Jordanian quantum
superspace: its calculus, the generalized permutation, torsionless
connections, curvature and the metric.
"""

__version__ = "1.0.0"

from .algebra import AlgebraElement, Presentation
from .coefficients import Poly
from .expr import ParseError, format_element, parse_expression

__all__ = ["AlgebraElement", "Presentation", "Poly", "ParseError", "format_element", "parse_expression", "__version__"]
