"""Curves in a plane with a conformal metric e^{2 phi}(dx^2 + dy^2).

Two conformal factors matter here:

* ``rotation(n)``: phi = (n-1) log sin x on x in (0, pi).  Weighted curve
  length equals (up to a constant) the area of the hypersurface of revolution
  in S^n x R traced by the curve.

* ``angenent_weight(lam)``: phi = lam log x - (x^2+y^2)/4 on x > 0.  Closed
  geodesics of this metric are the self-shrinking doughnut profiles; lam = n-1
  recovers the classical case.

Geodesic curvature with respect to g_phi of a curve with Euclidean curvature
kappa and unit normal nvec (left of the tangent) is

    kappa_phi = e^{-phi} (kappa + <grad phi, nvec>),

and the geodesic equation in an affine (g_phi arclength) parameter reads

    x'' = -(x'^2 - y'^2) phi_x - 2 x' y' phi_y
    y'' =  (x'^2 - y'^2) phi_y - 2 x' y' phi_x

from the Christoffel symbols of a conformal metric.  All functions are pure.
"""

from __future__ import annotations

import numpy as np
from dataclasses import dataclass

from .errors import DomainError

EPS_DOM = 1e-12  # evaluations closer than this to a domain edge are rejected


class ConformalProfile:
    """Conformal factor phi(x, y) with gradient, selecting the geometry."""

    __slots__ = ("kind", "n", "lam")

    def __init__(self, kind, n=None, lam=None):
        self.kind = kind
        self.n = n
        self.lam = lam

    @classmethod
    def rotation(cls, n: int) -> "ConformalProfile":
        if n < 2:
            raise ValueError("rotation profile needs integer n >= 2")
        return cls("rotation", n=int(n))

    @classmethod
    def angenent_weight(cls, lam: float) -> "ConformalProfile":
        if lam <= 0:
            raise ValueError("angenent weight needs lam > 0")
        return cls("angenent", lam=float(lam))

    @classmethod
    def flat(cls) -> "ConformalProfile":
        # test-only: phi == 0 isolates discretization error from geometry
        return cls("flat")

    def __repr__(self):
        if self.kind == "rotation":
            return f"ConformalProfile.rotation(n={self.n})"
        if self.kind == "angenent":
            return f"ConformalProfile.angenent_weight(lam={self.lam})"
        return "ConformalProfile.flat()"

    # -- domain ------------------------------------------------------------

    def check_domain(self, x, y=None):
        x = np.asarray(x, dtype=float)
        if self.kind == "rotation":
            if np.any(x <= EPS_DOM) or np.any(x >= np.pi - EPS_DOM):
                raise DomainError(
                    f"rotation profile needs x in (0, pi), got range "
                    f"[{x.min():.3e}, {x.max():.3e}]")
        elif self.kind == "angenent":
            if np.any(x <= EPS_DOM):
                raise DomainError(
                    f"angenent weight needs x > 0, got min {x.min():.3e}")

    # -- phi and gradient ----------------------------------------------------

    def phi(self, x, y):
        self.check_domain(x, y)
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.kind == "rotation":
            return (self.n - 1) * np.log(np.sin(x))
        if self.kind == "angenent":
            return self.lam * np.log(x) - (x * x + y * y) / 4.0
        return np.zeros(np.broadcast(x, y).shape)

    def grad_phi(self, x, y):
        self.check_domain(x, y)
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.kind == "rotation":
            px = (self.n - 1) / np.tan(x)
            py = np.zeros_like(px)
            return px, py
        if self.kind == "angenent":
            px = self.lam / x - x / 2.0
            py = -y / 2.0
            return px, py
        z = np.zeros(np.broadcast(x, y).shape)
        return z, z.copy()


@dataclass
class ParametricCurve:
    """Ordered polyline (x_i, y_i); closed curves wrap around."""

    nodes: np.ndarray
    closed: bool = False

    def __post_init__(self):
        self.nodes = np.asarray(self.nodes, dtype=float)
        if self.nodes.ndim != 2 or self.nodes.shape[1] != 2:
            raise ValueError("nodes must be an (N, 2) array")
        if len(self.nodes) < 3:
            raise ValueError("need at least 3 nodes")
        seg = np.diff(self.nodes, axis=0)
        if np.any(np.hypot(seg[:, 0], seg[:, 1]) == 0.0):
            raise ValueError("consecutive nodes must be distinct")

    @property
    def x(self):
        return self.nodes[:, 0]

    @property
    def y(self):
        return self.nodes[:, 1]

    def segment_lengths(self):
        pts = self.nodes
        if self.closed:
            pts = np.vstack([pts, pts[:1]])
        seg = np.diff(pts, axis=0)
        return np.hypot(seg[:, 0], seg[:, 1])


def geodesic_curvature(curve: ParametricCurve, profile: ConformalProfile):
    """Signed kappa_phi at each interior node (every node if closed).

    Euclidean curvature comes from the circle through three consecutive
    nodes (second order on smooth arcs); the normal is the left normal of
    the chord tangent.
    """
    pts = curve.nodes
    profile.check_domain(pts[:, 0], pts[:, 1])
    if curve.closed:
        p0 = np.roll(pts, 1, axis=0)
        p1 = pts
        p2 = np.roll(pts, -1, axis=0)
    else:
        p0, p1, p2 = pts[:-2], pts[1:-1], pts[2:]

    a = p1 - p0
    b = p2 - p1
    c = p2 - p0
    la = np.hypot(a[:, 0], a[:, 1])
    lb = np.hypot(b[:, 0], b[:, 1])
    lc = np.hypot(c[:, 0], c[:, 1])
    cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    kappa = 2.0 * cross / (la * lb * lc)

    tx = c[:, 0] / lc
    ty = c[:, 1] / lc
    nx, ny = -ty, tx  # left of the tangent
    px, py = profile.grad_phi(p1[:, 0], p1[:, 1])
    phi = profile.phi(p1[:, 0], p1[:, 1])
    return np.exp(-phi) * (kappa + px * nx + py * ny)


def geodesic_ode_rhs(state, profile: ConformalProfile):
    """(x, y, x', y') -> (x', y', x'', y'') in an affine parameter."""
    x, y, xp, yp = state
    if xp == 0.0 and yp == 0.0:
        raise ValueError("tangent must be nonzero")
    px, py = profile.grad_phi(x, y)
    px = float(px)
    py = float(py)
    xpp = -(xp * xp - yp * yp) * px - 2.0 * xp * yp * py
    ypp = (xp * xp - yp * yp) * py - 2.0 * xp * yp * px
    return xp, yp, xpp, ypp


def weighted_length(curve: ParametricCurve, profile: ConformalProfile) -> float:
    """Trapezoidal integral of e^{phi} ds over the polyline."""
    pts = curve.nodes
    if curve.closed:
        pts = np.vstack([pts, pts[:1]])
    w = np.exp(profile.phi(pts[:, 0], pts[:, 1]))
    seg = np.diff(pts, axis=0)
    ds = np.hypot(seg[:, 0], seg[:, 1])
    return float(np.sum(0.5 * (w[:-1] + w[1:]) * ds))


def gphi_speed(state, profile: ConformalProfile) -> float:
    """|gamma'|_{g_phi} for an affine-parameter state; conserved on geodesics."""
    x, y, xp, yp = state
    return float(np.exp(profile.phi(x, y)) * np.hypot(xp, yp))
