"""Numeric tolerances shared across the package.

``TOL_CMP`` can be rescaled through the ``COHCAT_TOL`` environment variable
(a multiplicative factor, read once at import).  This hook exists for test
harnesses only; production callers should rely on the defaults.
"""

from __future__ import annotations

import os

_SCALE = float(os.environ.get("COHCAT_TOL", "1"))

# Sum-to-one checks on probability vectors.
TOL_SUM = 1e-12

# Majorization prefix comparisons and entropy-inequality margins.
TOL_CMP = 1e-9 * _SCALE

# Kraus completeness defect and per-column nonzero threshold.
TOL_CHAN = 1e-10

# Entries below this after canonicalization are clamped to exactly 0.
ZERO_CLAMP = 1e-15
