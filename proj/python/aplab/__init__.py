from ._aplab import *  # noqa: F401,F403
from ._aplab import __version__  # noqa: F401
