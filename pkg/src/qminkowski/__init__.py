"""Exact computer algebra for q-deformed Minkowski space and its hyperboloids."""
from __future__ import annotations

from .action import ActionConfig, QGGen, act, is_invariant
from .algebra import AlgebraId, NCPoly, cas_element, gens, normal_form, radial_form, specialize, to_text
from .fields import apply_cal, apply_tangent, bra, d_r, partial
from .laplace import idempotent, laplace, maxwell
from .parser import ParseError, parse_poly
from .scalars import QFrac, Scalar, qint

__all__ = [
    "ActionConfig", "AlgebraId", "NCPoly", "ParseError", "QFrac", "QGGen", "Scalar",
    "act", "apply_cal", "apply_tangent", "bra", "cas_element", "d_r", "gens", "idempotent",
    "is_invariant", "laplace", "maxwell", "normal_form", "parse_poly", "partial", "qint",
    "radial_form", "specialize", "to_text",
]
__version__ = "0.1.0"
