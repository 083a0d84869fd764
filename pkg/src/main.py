"""Main entry point for the causet command line."""

import sys

from causet.cli import main as cli_main


def main():
    """Main entry point."""
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
