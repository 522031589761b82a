"""
Central configuration for SpectralBounds.
Loads from environment variables with sensible defaults.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Base directory (project root)
BASE_DIR = Path(__file__).resolve().parent.parent

TOOL_VERSION = "0.5.0"

# Tolerances (relative to max(1, ||A||_F) unless noted)
TOL_CLASS = float(os.getenv("SPECTRAL_BOUNDS_TOL_CLASS", "1e-10"))
TOL_EIG = float(os.getenv("SPECTRAL_BOUNDS_TOL_EIG", "1e-10"))
TOL_VERIFY = float(os.getenv("SPECTRAL_BOUNDS_TOL", "1e-8"))
TOL_HULL = float(os.getenv("SPECTRAL_BOUNDS_TOL_HULL", "1e-6"))

# Eigensolvers
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 30
QR_MAX_N = 64
QR_ITERATIONS_PER_N = 100

# Numerical range sweep
NUM_ANGLES = int(os.getenv("SPECTRAL_BOUNDS_NUM_ANGLES", "720"))
MIN_ANGLES = 8

# Bound estimators
THETA_GRID = 1024
POWER_SET_MAX_N = 12

# Output
OUTPUT_DIR = Path(os.getenv("SPECTRAL_BOUNDS_OUTPUT_DIR", str(BASE_DIR / "data" / "reports")))

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR = BASE_DIR / "logs"

# Ensure directories exist
for d in [OUTPUT_DIR, LOG_DIR]:
    d.mkdir(parents=True, exist_ok=True)
