#!/usr/bin/env python3
"""
Command-line launcher for ordpath.

Usage: python cli.py <command> [options]   (python cli.py --help for the list)
"""

import sys
import os

# Add src to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))


def main():
    """Run the ordpath CLI and exit with its status."""
    try:
        from ordpath.main import main as ordpath_main
    except ImportError as e:
        print(f"❌ Import Error: {str(e)}")
        print("\n💡 Install the dependencies with: pip install -r requirements.txt")
        return 2

    try:
        return ordpath_main()
    except KeyboardInterrupt:
        print("\n\n⏹️  Stopped by user")
        return 130


if __name__ == "__main__":
    sys.exit(main())
