#!/usr/bin/env python3
"""
Quiver tool: classification, indecomposables, roots and Köthe decisions
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
