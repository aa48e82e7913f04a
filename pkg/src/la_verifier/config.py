# src/la_verifier/config.py

# Default parameter grid (p, q in -3..3 with p^2 + 4q != 0)
DEFAULT_GRID_P = tuple(range(-3, 4))
DEFAULT_GRID_Q = tuple(range(-3, 4))
DEFAULT_GRID_R = tuple(range(-2, 3))
DEFAULT_GRID_A = (-1, 0, 1, 2)
DEFAULT_GRID_B = (-1, 0, 1, 2)

# Index bounds
DEFAULT_N_MAX = 25          # sequence and Binet paths
DEFAULT_RECURRENCE_N_MAX = 30
DEFAULT_SUMMATION_N_MAX = 20  # Leonardo summation formula
DEFAULT_VAJDA_N_MAX = 10    # n for the Vajda family
DEFAULT_SHIFT_MAX = 5       # u, v for the Vajda family
DEFAULT_M_MAX = 15          # matrix power identity
DEFAULT_COLUMN_M_MAX = 20   # column-vector propagation
MATRIX_M_LIMIT = 60         # largest power the matrix command accepts
DEFAULT_CERECEDA_N_MAX = 12 # bordered tridiagonal determinants
DEFAULT_SERIES_ORDER = 21   # coefficients 0..20

# Reports
COUNTEREXAMPLE_CAP = 10
DEFAULT_OUTPUT_DIRECTORY = "./reports"
REPORT_FILE_SUFFIX = ".json"
SUMMARY_FILE_NAME = "summary.json"

# Execution
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "WARNING"

# Named parameter sets (p, q, r, a, b)
LEONARDO_PARAMS = (1, 1, 1, 1, 1)
ERNST_PARAMS = (1, 2, 1, 1, 1)

# CLI exit codes
EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_CONFIG_ERROR = 2
EXIT_UNDER_TEST_FAILED = 3
EXIT_MUST_PASS_FAILED = 4
