"""Numeric policy shared by every module.

All equality, rank and subspace decisions in the package go through the
same pair of thresholds so that sign- and tolerance-sensitive results
cannot drift between modules.
"""

# Amplitudes below this magnitude are dropped from sparse state vectors
# and operator expressions.
EPS_DROP = 1e-12

# Tolerance for equality, orthogonality, rank and projector decisions.
# Double precision over the tiny sectors handled here leaves ~3 orders
# of margin.
EPS_TOL = 1e-9

# Entropy threshold for the entanglement-IV decision.  Von Neumann
# entropy is quadratically flat near pure states, so this is looser
# than EPS_TOL.
EPS_ENTROPY = 1e-7

# Desk-scale bounds: dense sector matrices stay well below 1e7 entries.
MAX_MODES = 10
MAX_PARTICLES = 6

# Defaults for randomized sweeps; the CLI lets ENTWB_SEED override.
DEFAULT_SEED = 7041
DEFAULT_PROBE_SAMPLES = 100
