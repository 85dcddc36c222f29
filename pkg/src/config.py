# src/config.py
"""
Project-wide settings.

Values come from the environment (or a .env file at the project root) so
tolerances and seeds can be tuned without touching code. Library functions
take these as keyword defaults; callers can always pass their own.
"""

import os

from dotenv import load_dotenv

# Load environment variables from .env
load_dotenv()


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {raw!r}")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")


# --------------------------------------------
# Numerical tolerances
# --------------------------------------------
TOLERANCE = _env_float("LALPHA_TOLERANCE", 1e-8)
GROUPING_TOLERANCE = _env_float("LALPHA_GROUPING_TOLERANCE", 1e-8)
EQUITABLE_TOLERANCE = _env_float("LALPHA_EQUITABLE_TOLERANCE", 1e-10)

# --------------------------------------------
# Jacobi eigensolver
# --------------------------------------------
JACOBI_MAX_SWEEPS = _env_int("LALPHA_JACOBI_MAX_SWEEPS", 100)
JACOBI_OFF_TOLERANCE = _env_float("LALPHA_JACOBI_OFF_TOLERANCE", 1e-13)

# --------------------------------------------
# Characteristic polynomials / output
# --------------------------------------------
CHARPOLY_MAX_ORDER = _env_int("LALPHA_CHARPOLY_MAX_ORDER", 20)
SIGNIFICANT_DIGITS = _env_int("LALPHA_SIGNIFICANT_DIGITS", 12)

# --------------------------------------------
# Verification corpus
# --------------------------------------------
CORPUS_SEED = _env_int("LALPHA_CORPUS_SEED", 20250131)
ALPHA_STEPS = _env_int("LALPHA_ALPHA_STEPS", 11)
