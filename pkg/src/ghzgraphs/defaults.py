"""Default resource caps and tolerances used across the package."""

SEARCH_CAP = 10**8
DENSE_CAP = 4096
STATE_CAP = 10**7
TOLERANCE = 1e-9
