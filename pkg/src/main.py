"""
Main Entry Point for the Nakayama resolution-quiver tool.

Configures logging to stderr and hands the arguments to the CLI.
"""

import logging
import sys

# Configure logging; --verbose lowers the level to DEBUG.
logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)

from cli import main

if __name__ == "__main__":
    sys.exit(main())
