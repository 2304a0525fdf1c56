#!/usr/bin/env python
"""
Runner script for the modular product domination toolkit.

Run with:
    python run_moddom.py compute -i petersen -i petersen
    python run_moddom.py verify --max-n 4 --seed 7 --output verify_report
"""
import sys
import os
import logging
import traceback

from rich.console import Console
from rich.logging import RichHandler

# Configure logging
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    filename="moddom_debug.log",
    filemode="w"
)
console = RichHandler(console=Console(stderr=True))
console.setLevel(logging.INFO)
logging.getLogger().addHandler(console)

# Add the project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

try:
    from src.main.python.moddom_cli import main

    if __name__ == "__main__":
        main()
except Exception as e:
    logging.error(f"Error running moddom: {e}")
    traceback.print_exc()
    print(f"ERROR: {e}. Check moddom_debug.log for details.")
    sys.exit(1)
