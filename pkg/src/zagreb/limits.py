"""Size caps that keep every computation exact and desk-scale.

The canonical-form search and the class generators are certified correct only
up to ``DEFAULT_MAX_VERTICES`` vertices.  The cap can be raised or lowered per
process with the ``ZAGREB_MAX_N`` environment variable; raising it trades
runtime for reach, it does not change any algorithm.
"""

import os

from .errors import ParameterError

DEFAULT_MAX_VERTICES = 12
MAX_N_ENV = "ZAGREB_MAX_N"

# Orientation bit-vectors are indexed by a mask with one bit per edge.
MAX_ORIENTATION_EDGES = 30
# Value histograms materialize one counter bucket per orientation.
MAX_DISTRIBUTION_EDGES = 24
# The matching solver tabulates one entry per vertex subset.
MAX_MATCHING_VERTICES = 20


def max_vertices() -> int:
    """Current vertex cap, honoring the ZAGREB_MAX_N override."""
    raw = os.environ.get(MAX_N_ENV, "").strip()
    if not raw:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ParameterError(f"{MAX_N_ENV} must be positive, got {value}")
    return value
