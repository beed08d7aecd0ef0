#!/usr/bin/env python3
"""Run the acceptance checks and show one PASS line per criterion.

Thin wrapper over the pytest module so the gate has a single source of
truth; any extra arguments are passed through (e.g. -x to stop early).
Exits nonzero if any criterion fails.
"""

import pathlib
import sys

import pytest

if __name__ == "__main__":
    acceptance = pathlib.Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    sys.exit(pytest.main(["-s", "-q", str(acceptance), *sys.argv[1:]]))
