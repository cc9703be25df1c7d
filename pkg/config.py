import logging
import os
from typing import Dict

# Algebras
MAX_CLIFFORD_N = 8
DEFAULT_ALGEBRA = "clifford:3"

OCTONION_NAMES = ("1", "i", "j", "k", "l", "li", "lj", "lk")


# Dunkl multiplicities
MULTIPLICITY_MODES = ("canonical", "uniform")
DEFAULT_MULTIPLICITY_MODE = "canonical"


# CLI
OUTPUT_FORMATS = ("text", "dot", "jsonl")
DEFAULT_OUTPUT_FORMAT = "text"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

OPERATOR_ALIASES: Dict[str, str] = {
    "dbar": "cauchy_riemann",
    "d": "conj_cauchy_riemann",
    "delta": "laplacian",
    "lap": "laplacian",
    "D": "dunkl_cr",
    "Dc": "conj_dunkl_cr",
    "dunkl_lap": "dunkl_laplacian",
    "S": "casimir",
    "gamma": "spherical_dirac",
}


# Fueter trees
TREE_SETTINGS = {
    'rankdir': "TB",
    'leaf_label': "M",
    'merge_leaves': True,
    'single_edge_label': "Δ",
}


# Randomized checks
RANDOM_SEED = int(os.getenv('FUETER_SEED', '20240601'))

PROPERTY_CASES = int(os.getenv('FUETER_PROPERTY_CASES', '200'))

RANDOM_SETTINGS = {
    'max_numerator': 5,
    'max_denominator': 3,
    'max_terms': 4,
}


def property_cases(default: int = PROPERTY_CASES) -> int:
    """
    Number of randomized cases per property suite.

    Args:
        default: Fallback when the environment does not override it

    Returns:
        A positive case count
    """
    return max(1, int(os.getenv('FUETER_PROPERTY_CASES', str(default))))


# Enable debug mode (can be overridden by environment variable)
DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 'yes')

# Verbose logging
VERBOSE = os.getenv('VERBOSE', 'False').lower() in ('true', '1', 'yes')


def configure_logging(verbose: bool = VERBOSE, debug: bool = DEBUG) -> None:
    """
    Set up root logging for command-line runs.

    Args:
        verbose: Log progress messages (INFO)
        debug: Log every intermediate step (DEBUG)
    """
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


__version__ = "1.0.0"
__project__ = "Dunkl-regular functions and Fueter trees"
