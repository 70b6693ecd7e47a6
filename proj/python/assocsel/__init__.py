"""Python bindings for the assocsel C++ library."""

from ._core import *  # noqa: F401,F403
from ._core import AssocselError, ConfigError, PreconditionError, RangeError, run_cli

__version__ = "0.1.0"


def cli(*args: str) -> tuple[int, str, str]:
    """Run the command-line front end in-process; returns (status, stdout, stderr)."""
    return run_cli([str(a) for a in args])
