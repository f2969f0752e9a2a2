from ._zxconn import *  # noqa: F401,F403
from ._zxconn import __doc__  # noqa: F401
