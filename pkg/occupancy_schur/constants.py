# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import importlib_metadata


try:
    __version__ = importlib_metadata.version("occupancy-schur")
except importlib_metadata.PackageNotFoundError:
    # Running from a source checkout that was never installed.
    __version__ = "0.0.0.dev0"


# Seed used when neither the command line nor a config file gives one.
DEFAULT_SEED = 0

# Comparison tolerance for verification reports.
DEFAULT_TOLERANCE = 1e-9

# Output format for the command line front end: table, json or csv.
DEFAULT_FORMAT = "table"

# Simplex points must sum to one within this after renormalization.
SUM_TOLERANCE = 1e-12

# Strict construction rejects anything further than this from a unit sum.
NOT_EVEN_CLOSE = 1e-6

# Prefix-sum gaps in (-tol, 0) still count as satisfied.
MAJORIZATION_TOLERANCE = 1e-12

# EXACT BACKEND BUDGETS
# Sequential-binomial DP: boxes and balls.
DEFAULT_DP_MAX_BOXES = 64
DEFAULT_DP_MAX_BALLS = 512
# Inclusion-exclusion enumerates all 2**n subsets.
DEFAULT_IE_MAX_BOXES = 25
# Above this many boxes the alternating sum loses more than 1e-9 to
# cancellation, so cross-checks leave inclusion-exclusion out.
IE_CROSSCHECK_MAX_BOXES = 12
# Brute force enumerates all n**N ball sequences.
DEFAULT_BRUTE_MAX_SEQUENCES = 10 ** 7

# Suffix probability at or below which a box is treated as unreachable.
RESIDUAL_EPSILON = 1e-15

# Rows of ball sequences materialized at once by the enumerating backends.
ENUMERATION_CHUNK = 1 << 16

# MONTE CARLO
# Trials drawn from one seeded substream.
DEFAULT_SHARD_SIZE = 1 << 16
# Threads used to work through the shards.
DEFAULT_WORKERS = 4
# Uniform draws materialized at once inside a shard.
DRAW_BLOCK = 1 << 20

# SCHUR ANALYSIS
# Central-difference step, relative to the unit simplex.
DEFAULT_FD_STEP = 1e-6
# Smallest entry of a sampled interior point.
INTERIOR_MARGIN = 1e-6
# Pass thresholds for the Schur condition.
SCHUR_TOLERANCE_EXACT = 1e-12
SCHUR_TOLERANCE_FD = 1e-6
# Pair-condition values evaluated at once by the Schur check.
SCHUR_BLOCK_VALUES = 1 << 20
# Largest number of permutations mixed by the majorized-pair generator.
DEFAULT_MAX_MIXES = 4

# OPTIMIZER
DEFAULT_ITERS = 500
DEFAULT_STARTS = 1
# Random starts used by `verify conjecture`.
VERIFY_STARTS = 20
DEFAULT_SEARCH_SAMPLES = 10 ** 5
# Stop when a projected-gradient step moves the iterate less than this.
STEP_TOLERANCE = 1e-12
# Distance to the uniform point accepted as convergence.
CONVERGENCE_TOLERANCE = 1e-6
# Random search must not beat the uniform point by more than this.
SEARCH_TOLERANCE = 1e-12
# Sufficient-decrease fraction. At 0.5 accepted steps near the maximizer stay
# within the inverse local curvature.
ARMIJO_SLOPE = 0.5
# Ceiling for the growing projected-gradient step.
MAX_STEP = 1.0
MAX_BACKTRACKS = 60

# VERIFICATION DEFAULTS
DEFAULT_PAIRS = 200
DEFAULT_SAMPLES = 1000
DEFAULT_TRIALS = 10 ** 5

# LOGGING
# The type of interval
# (seconds, minutes, hours... c.f. logging.handlers.TimedRotatingFileHandler)
DEFAULT_LOGFILE_WHEN = "midnight"
# The rollover interval
DEFAULT_LOGFILE_INTERVAL = 1
# Number of log files to keep
DEFAULT_LOGFILE_BACKUPCOUNT = 7
# The log format
DEFAULT_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s:%(lineno)d - %(message)s"

# CLI EXIT STATUS
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_BUDGET = 3
