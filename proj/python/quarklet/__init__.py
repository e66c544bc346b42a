from ._quarklet import *  # noqa: F401,F403
