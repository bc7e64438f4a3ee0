"""
Engine constants.

These values are intentionally not configurable via environment variables.
"""

# Identifier prefixes
INSERTED_VERTEX_PREFIX = "B"  # vertices created by parity normalization / refinement
BRIESKORN_VERTEX_PREFIX = "A"
ARROW_PREFIX = "St"

# Special surfaces of the divisor complex
STRICT_SHEET_ID = "St(g)"
DISC_FAMILY_ID = "D~"

# Markers for where the strict transform meets a fiber chain
S_MEETS_C1 = "C1"
S_MEETS_NONE = "none"

# Oracle range covered by the equivalence check
ORACLE_MAX_MULTIPLICITY = 50

# Refinement invariance sample used by `check`
DEFAULT_REFINEMENT_SEEDS = (0, 1, 2)
DEFAULT_REFINEMENT_STEPS = 4

# Flag carried by curve records whose decorations are not determined
FIGURE_AMBIGUOUS = "figure-ambiguous"
