"""
Package-wide constants
"""

# Name of the logger shared by every module of the package
LOGGER_NAME = "ideal-divisors-logger"

# Largest exponent accepted by the command line without --allow-large
MAX_LAMBDA = 31

# Default generator-search budget
DEFAULT_SUPPORT = 3
DEFAULT_COEFF_BOUND = 3
DEFAULT_MAX_CANDIDATES = 2_000_000
