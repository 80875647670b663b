"""Joint transmit-covariance and fluid-antenna port-selection optimization."""

from ._faisac import *  # noqa: F401,F403
from ._faisac import __version__  # noqa: F401
