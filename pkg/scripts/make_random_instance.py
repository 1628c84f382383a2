"""
Script to write a random uniform EUC_2D instance in TSPLIB format.
"""
import sys
from pathlib import Path

import click

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.data.generator import random_instance  # noqa: E402
from src.data.tsplib_loader import serialize_instance  # noqa: E402


@click.command()
@click.option("--n", "size", type=click.IntRange(min=2), required=True, help="Number of cities.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--side", type=float, default=1000.0, show_default=True, help="Square side length.")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Output file [default: data/tsplib/rand<n>_<seed>.tsp].")
def make_random_instance(size, seed, side, out):
    """Generate n uniformly placed cities with integer coordinates."""
    spec = random_instance(size, seed=seed, side=side)
    if out is None:
        out = Path(__file__).parent.parent / "data" / "tsplib" / f"{spec.name}.tsp"
    out.write_bytes(serialize_instance(spec))
    click.echo(f"Wrote {spec.name} ({size} cities) to {out}")


if __name__ == "__main__":
    make_random_instance()
