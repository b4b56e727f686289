"""
Configuration settings for the regular-language witness toolkit
"""
import os
from pathlib import Path

from dotenv import load_dotenv

# Base paths
PROJECT_ROOT = Path(__file__).parent.parent.parent
LOGS_DIR = PROJECT_ROOT / "logs"

# Pick up overrides from a local .env file if one exists
load_dotenv(PROJECT_ROOT / ".env")


def _env_int(name: str, default: int) -> int:
    """Read a positive integer override from the environment"""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


# Characters the regex grammar reserves; they can never be alphabet symbols
RESERVED_SYMBOLS = frozenset("()|&!*#_∅ε^ \t\r\n")

# Language core configuration
LANGUAGE_CONFIG = {
    "max_alphabet_size": _env_int("REGLANG_MAX_ALPHABET", 16),
    "derivative_cache_size": 1 << 16,
}

# Orbit exploration configuration
ORBIT_CONFIG = {
    "bound": _env_int("REGLANG_ORBIT_BOUND", 10_000),
    # Words up to this length bucket Language states before bisimulation
    "signature_length": 3,
}

# Monoid configuration
MONOID_CONFIG = {
    "full_associativity_limit": 64,  # n^3 products checked exhaustively up to here
    "associativity_spot_checks": 20_000,
    "divides_budget": 8,  # largest |N| the division search will explore
}

# Verification configuration
VERIFICATION_CONFIG = {
    "sample_max_length": _env_int("REGLANG_SAMPLE_LENGTH", 6),
    "seed": _env_int("REGLANG_SEED", 20240917),
    "corpus_size": 500,
    "bridge_corpus_size": 1000,
    "max_depth": 6,
    "random_sigma_sets": 200,
    "moore_samples": 1000,
    "anbn_bound": 50,
}

# Command-line configuration
CLI_CONFIG = {
    "default_format": "text",
    "formats": ("text", "json", "dot"),
}

# Logging configuration
LOG_CONFIG = {
    "level": os.environ.get("REGLANG_LOG_LEVEL", "WARNING").upper(),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "log_file": os.environ.get("REGLANG_LOG_FILE") or None,
}
