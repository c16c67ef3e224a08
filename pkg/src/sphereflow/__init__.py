"""Rotationally symmetric mean curvature flow in S^n x [-1,1].

The SO(n)-quotient of S^n x [-1,1] is the strip [0,pi] x [-1,1]; hypersurface
area becomes weighted curve length under the conformal metric
sin(x)^(2(n-1)) (dx^2 + dy^2), and mean curvature flow becomes a quasilinear
graph evolution for the section curve in D = [0,pi/2] x [0,1].  This package
builds the static and self-similar barrier curves (spherical catenoids,
shrinking-doughnut geodesics), evolves ascending section curves, and runs the
pinch/collapse interpolation experiment locating the critical initial datum.
"""

__version__ = "0.1.0"

from .errors import (
    SphereflowError,
    DomainError,
    SearchError,
    NumericalError,
    GeometryError,
    ConsistencyError,
)

__all__ = [
    "SphereflowError",
    "DomainError",
    "SearchError",
    "NumericalError",
    "GeometryError",
    "ConsistencyError",
    "__version__",
]
