"""Run the command-line frontend via ``python -m leodoppler``."""
import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
