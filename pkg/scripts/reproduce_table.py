#!/usr/bin/env python3
"""Print the symbolic homotopy-type table for all ten families.

Usage: python scripts/reproduce_table.py [n_max]
"""
import sys

from gridmatch.cli import main

n_max = sys.argv[1] if len(sys.argv) > 1 else "8"
sys.exit(main(["table", n_max]))
