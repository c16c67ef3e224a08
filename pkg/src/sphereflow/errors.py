"""Exception hierarchy.  Exit-code mapping for the CLI lives in cli.py."""


class SphereflowError(Exception):
    """Base class for all package errors."""


class DomainError(SphereflowError):
    """Evaluation outside (or within eps_dom of) a conformal factor's domain."""


class SearchError(SphereflowError):
    """A bracketing scan or bisection failed.  Carries the scan table."""

    def __init__(self, msg, table=None):
        super().__init__(msg)
        self.table = table


class NumericalError(SphereflowError):
    """Quadrature / ODE integration did not converge."""

    def __init__(self, msg, diagnostics=None):
        super().__init__(msg)
        self.diagnostics = diagnostics


class GeometryError(SphereflowError):
    """A geometric construction (dilation, fitting) is infeasible."""


class ConsistencyError(SphereflowError):
    """Two-chart stitch tolerance exceeded; carries the partial run."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial
