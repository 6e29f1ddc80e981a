import os

from dotenv import load_dotenv

load_dotenv()

# ROOT DATA FOLDER
DATA_FOLDER = os.getenv("SPECGAP_DATA_FOLDER", "./specgap_data")

# PARALLELISM
try:
    THREADS = max(1, int(os.getenv("SPECGAP_THREADS", str(os.cpu_count() or 1))))
except ValueError:
    THREADS = 1

# TOLERANCES
CELL_SPREAD_TOL = 1e-7  # max in-cell spread of a Fiedler vector
DECREASE_MARGIN = 1e-9  # strict decrease margin between cell means
GAP23_TOL = 1e-8  # below this lambda3 - lambda2 is near-degenerate
TIE_TOL = 1e-10  # co-minimal threshold in the census
RESIDUAL_TOL = 1e-9
HYPOTHESIS_TOL = 1e-9
SKEW_TOL = 1e-7

# SEARCH LIMITS
FIT_SEARCH_NODE_LIMIT = 2_000_000
ENUMERATION_MAX_ORDER = 14

# REPORTS
FLOAT_SIGNIFICANT_DIGITS = 12
CSV_HEADER_VERSION = "# specgap-csv v1"


def get_threads() -> int:
    """Worker count for batch computations, re-read from the environment."""
    value = os.getenv("SPECGAP_THREADS")
    if value is None:
        return THREADS
    try:
        return max(1, int(value))
    except ValueError:
        return THREADS
