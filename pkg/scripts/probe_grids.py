#!/usr/bin/env python3
"""Probe matching complexes of small m x n grids for the wedge picture:
torsion-free homology concentrated in one contiguous dimension band.

Usage: python scripts/probe_grids.py [max_cells_budget]
"""
import sys

from gridmatch.cli import main

budget = sys.argv[1] if len(sys.argv) > 1 else "150000"
cells = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2)]
rc = 0
for m, n in cells:
    rc |= main(["explore", str(m), str(n), "--budget", budget])
sys.exit(rc)
