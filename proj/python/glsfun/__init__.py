"""Grand Lebesgue space toolkit.

Two-way correspondence between generating functions psi and fundamental
functions phi, Young-Orlicz constructions, and the associated norms on
discrete measure spaces. Everything lives in the compiled core; this package
just re-exports it.
"""

from ._glsfun import *  # noqa: F401,F403
from ._glsfun import __doc__ as _core_doc

__version__ = "0.1.0"
