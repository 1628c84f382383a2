"""Command-line entrypoint for the Ant System solver."""
from src.cli import main

if __name__ == "__main__":
    main()
