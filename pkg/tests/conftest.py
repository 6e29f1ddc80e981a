"""
Pytest configuration file.

This file ensures that the project root is in the Python path,
allowing tests to import from the api and specgap modules.
"""

import os
import sys
from pathlib import Path

# Small worker pools under test
os.environ.setdefault("SPECGAP_THREADS", "2")

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))
