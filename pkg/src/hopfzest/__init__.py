"""Exact construction and verification of zestings of pointed Hopf algebras."""

from __future__ import annotations

from .errors import ZestingError
from .scalar import ONE, ZERO, TorsionScalar, unity, zeta

__all__ = ["ZestingError", "TorsionScalar", "ONE", "ZERO", "unity", "zeta"]
__version__ = "0.1.0"
