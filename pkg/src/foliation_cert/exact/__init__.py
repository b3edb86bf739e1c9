from .curves import curve_derivative, homogenize, restrict_to_line
from .poly import (XY, Poly, Ring, TermOrder, coeff, differentiate, divide_exact,
                   format_coeff, from_literal, homogeneous_component, ring_ops,
                   substitute, to_literal)
from .resultant import coprime, resultant
from .univariate import square_split

__all__ = [
    "XY", "Poly", "Ring", "TermOrder", "coeff", "coprime", "curve_derivative",
    "differentiate", "divide_exact", "format_coeff", "from_literal",
    "homogeneous_component", "homogenize", "resultant", "restrict_to_line",
    "ring_ops", "square_split", "substitute", "to_literal",
]
