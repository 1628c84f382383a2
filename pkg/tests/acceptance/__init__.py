"""
Slow acceptance checks; enabled with RUN_SLOW_TESTS=1.
"""
import os

SLOW_TESTS = os.getenv("RUN_SLOW_TESTS") == "1"
