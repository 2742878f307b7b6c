"""
Runtime settings, read from the environment (and a local .env file).
"""

import os
import logging
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _int_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️ Ignoring non-integer {name}={raw!r}, using {default}")
        return default


LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("ORDPATH_LOG_FILE")

# Default worker count for ghn_exact
THREADS = max(1, _int_env("ORDPATH_THREADS", 1))

# Vertex cap of the exact longest-induced-path oracles
PATH_CAP = _int_env("ORDPATH_PATH_CAP", 30)

# Interval size up to which max_increasing_induced_path memoizes
MEMO_CAP = _int_env("ORDPATH_MEMO_CAP", 30)

# Largest integer (in bits) the tower evaluator will materialize
BIT_BUDGET = _int_env("ORDPATH_BIT_BUDGET", 1 << 20)

# Vertex cap of contains_ktt
KTT_CAP = _int_env("ORDPATH_KTT_CAP", 20)

# Largest n accepted by ghn_exact
GHN_MAX_N = _int_env("ORDPATH_GHN_MAX_N", 8)


def resolve_threads(flag=None):
    """
    Pick the worker count: the command-line flag wins over ORDPATH_THREADS.

    Args:
        flag: value of --threads, or None when not given

    Returns:
        Positive worker count
    """
    if flag is not None:
        return max(1, int(flag))
    return max(1, _int_env("ORDPATH_THREADS", THREADS))
