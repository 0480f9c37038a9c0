"""Born cross sections for Dirac particles on a solenoidal magnetic field."""

from ._solxs import *  # noqa: F401,F403
from ._solxs import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
