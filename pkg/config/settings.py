"""
Configuration settings for the quiver Köthe toolkit
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
EXAMPLES_DIR = DATA_DIR / "quivers"

if (PROJECT_ROOT / ".env").exists():
    load_dotenv(PROJECT_ROOT / ".env")

# Iteration caps
TOWER_STEP_CAP = int(os.getenv("QUIVER_MAX_STEPS", "10000"))
ROOT_ORBIT_CAP = int(os.getenv("QUIVER_ROOT_CAP", "10000"))
DIMSEQ_DEFAULT_CAP = 16

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FORMAT = os.getenv("LOG_FORMAT", "json")

# Köthe deciders
DEFAULT_KOETHE_MODE = "hereditary"
KOETHE_MODES = ["hereditary", "rsz"]

# Command-line surface
COMMANDS = [
    "classify", "indecs", "roots", "koethe",
    "separated", "dimseq", "reps", "crosscheck",
]
