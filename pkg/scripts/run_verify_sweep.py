#!/usr/bin/env python3
"""Full symbolic-vs-brute-force verification sweep.

Usage: python scripts/run_verify_sweep.py [n_max] [jobs]

Writes verify_report.json in the working directory.  Expect the O and J
rows to report mismatches from n = 3 / n = 4 on: the brute-force oracle
refutes the O-family wedge recursion there (see README).
"""
import sys

from gridmatch.cli import main

n_max = sys.argv[1] if len(sys.argv) > 1 else "5"
jobs = sys.argv[2] if len(sys.argv) > 2 else "1"
sys.exit(main(["verify", "--families", "all", "--n-max", n_max,
               "--jobs", jobs]))
