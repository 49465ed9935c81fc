"""Exception hierarchy."""


class PdmError(Exception):
    """Base class for all package errors."""


class DomainError(PdmError, ValueError):
    """Argument outside the domain of the function."""


class PoleError(DomainError):
    """Gamma function evaluated at a pole."""


class NonPositiveMassError(DomainError):
    """Mass profile evaluated to ``mu(r) <= 0``."""


class UnsupportedDimensionError(PdmError, ValueError):
    """Closed forms requested for a dimension other than 2 or 3."""


class InadmissibleAlphaError(DomainError):
    """Power-law exponent outside the range that yields a bound s-wave."""


class SearchFailure(PdmError, RuntimeError):
    """Maximum search bracket did not contain a single interior maximum."""


class StepLimitExceeded(PdmError, RuntimeError):
    """ODE integration used more than ``max_steps`` steps."""


class SeedFailure(PdmError, RuntimeError):
    """Asymptotic seed underflowed; choose a smaller ``r_end``."""


class StiffnessError(PdmError, RuntimeError):
    """Step size collapsed below ``1e-14 * r``."""


class ToleranceNotReached(PdmError, RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget."""


class EmptyOverlapError(PdmError, ValueError):
    """No numeric grid points inside the comparison window."""
