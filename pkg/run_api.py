#!/usr/bin/env python3
"""
Startup script for the specgap API server.
"""

import os
import sys
from pathlib import Path

import uvicorn
from loguru import logger

# Add the current directory to Python path so imports work
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))


def main() -> None:
    host = os.getenv("API_HOST", "127.0.0.1")
    port = int(os.getenv("API_PORT", "5055"))
    reload = os.getenv("API_RELOAD", "false").lower() == "true"

    logger.info(f"Starting specgap API server on {host}:{port}")
    logger.info(f"Reload mode: {reload}")

    uvicorn.run(
        "api.main:app",
        host=host,
        port=port,
        reload=reload,
        reload_dirs=[str(current_dir)] if reload else None,
    )


if __name__ == "__main__":
    main()
