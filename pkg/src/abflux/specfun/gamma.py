"""
Gamma function
Log-gamma for the Gamma ratios of the angular normalizations
"""

from scipy import special

from ..errors import DomainError
from .elementary import require_finite


def log_gamma(x: float) -> float:
    """
    ln Gamma(x) for x > 0.

    Args:
        x: Positive, finite argument

    Returns:
        float: ln Gamma(x)

    Raises:
        DomainError: x is not positive or not finite
    """
    x = require_finite("x", x)
    if x <= 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    return float(special.gammaln(x))
