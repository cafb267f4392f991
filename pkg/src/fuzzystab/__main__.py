"""
@file
@brief Runs the command line, ``python -m fuzzystab``.
"""
import sys
from .cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
