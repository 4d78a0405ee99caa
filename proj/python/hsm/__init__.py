from ._hsm import *  # noqa: F401,F403
from ._hsm import HsmError, __doc__  # noqa: F401
