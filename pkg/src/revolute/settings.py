"""
Settings for the revolute toolkit.

Values come from the environment (or a `.env` file next to `src/`) and are read
once at import time, except `REVOLUTE_CONFIG`, which the CLI reads per run.
"""

import logging
from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Read env
env = environ.Env(
    LOG_LEVEL=(str, "WARNING"),
    REVOLUTE_CONFIG=(str, ""),
    REVOLUTE_DELTA=(float, 0.05),
    REVOLUTE_CLOSED_FORM_DELTA=(float, 1e-3),
    REVOLUTE_SAMPLES=(int, 256),
    REVOLUTE_SEGMENTS=(int, 64),
    REVOLUTE_VERIFY_SAMPLES=(int, 4096),
    REVOLUTE_FD_STEP=(float, 1e-3),
    REVOLUTE_RK4_STEP=(float, 1e-3),
    REVOLUTE_QUAD_TOL=(float, 1e-10),
)
env.read_env(BASE_DIR.parent / ".env")

# logging
LOG_LEVEL = env("LOG_LEVEL")
logging.basicConfig(level=logging.getLevelName(LOG_LEVEL))

# Safe θ-window margin around the poles of tanθ and 1/sinθ
DELTA = env("REVOLUTE_DELTA")

# Pole margin for closed-form evaluation (poles only at sec)
CLOSED_FORM_DELTA = env("REVOLUTE_CLOSED_FORM_DELTA")

# Sampling defaults
SAMPLES = env("REVOLUTE_SAMPLES")
SEGMENTS = env("REVOLUTE_SEGMENTS")
VERIFY_SAMPLES = env("REVOLUTE_VERIFY_SAMPLES")

# Numerical kernels
FD_STEP = env("REVOLUTE_FD_STEP")
RK4_STEP = env("REVOLUTE_RK4_STEP")
QUAD_TOL = env("REVOLUTE_QUAD_TOL")


def config_path() -> str:
    return env("REVOLUTE_CONFIG")
