"""Define constants commonly used throughout semiact.

SPDX-License-Identifier: BSD-3-Clause
"""

# The maximum number of points of a dual group to enumerate before giving up.
ENUMERATION_BUDGET = 100_000

# The maximum number of candidate subsets to try when proving a left cover is minimal.
COVER_BUDGET = 100_000

# Roots of a Laurent symbol further than this from the unit circle are considered to be
# clear of it.
LAURENT_TAU = 1e-9

# Roots of a Laurent symbol closer than this to the unit circle are considered to be on
# it. Anything between the two tolerances is reported as borderline.
LAURENT_TAU_STRICT = 1e-12

# The default number of geometric series terms to take per root of a Laurent symbol.
LAURENT_TERMS = 30

# Defaults for the Neumann series refinement of a right inverse.
NEUMANN_TOLERANCE = 1e-12
NEUMANN_MAX_TERMS = 10_000

# Slack used when comparing floating point norms.
FLOAT_SLACK = 1e-12

# Exit codes used by the CLI.
EXIT_CODE_DECIDED = 0
EXIT_CODE_INPUT_ERROR = 1
EXIT_CODE_UNKNOWN = 2

# Label used for the adjoined zero of Rees matrix semigroups and disjoint unions.
ZERO_LABEL = "z"
