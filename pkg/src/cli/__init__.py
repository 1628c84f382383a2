"""
Command-line harness for solving, benchmarking and verifying.
"""
from src.cli.commands import EXIT_CONFIG, EXIT_IO, EXIT_OK, EXIT_VERIFY, cli, main

__all__ = ['cli', 'main', 'EXIT_OK', 'EXIT_CONFIG', 'EXIT_IO', 'EXIT_VERIFY']
