"""Spectra, energies and closed-form verification for unitary addition Cayley graphs."""

from ._uacg import *  # noqa: F401,F403
from ._uacg import __doc__  # noqa: F401

__version__ = "0.1.0"
