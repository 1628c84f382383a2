"""
TSPLIB loader - parse node-coordinate instances and tour files, compute edge weights.
"""
import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from src.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InstanceIOError,
    InvalidDimensionError,
    MalformedCoordError,
    MissingFieldError,
    TsplibError,
    UnsupportedEdgeWeightTypeError,
)
from src.models.aco_models import EdgeWeightType, InstanceSpec

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ("NAME", "DIMENSION", "EDGE_WEIGHT_TYPE")
COORD_SECTION = "NODE_COORD_SECTION"
TOUR_SECTION = "TOUR_SECTION"
# Sections that only appear in explicit-matrix or otherwise unsupported files.
UNSUPPORTED_SECTIONS = ("EDGE_WEIGHT_SECTION", "DISPLAY_DATA_SECTION", "DEPOT_SECTION")


def _decode(text: Union[bytes, str]) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8", errors="replace")
    return text


def _split_header(line: str) -> Tuple[str, str]:
    if ":" in line:
        key, value = line.split(":", 1)
    else:
        parts = line.split(None, 1)
        key, value = parts[0], parts[1] if len(parts) > 1 else ""
    return key.strip().upper(), value.strip()


def _header_dimension(header: Dict[str, str]) -> int:
    try:
        return int(header["DIMENSION"])
    except ValueError as exc:
        raise InvalidDimensionError(f"DIMENSION is not an integer: {header['DIMENSION']!r}") from exc


def parse_instance(text: Union[bytes, str]) -> InstanceSpec:
    """
    Parse a TSPLIB node-coordinate file.

    Args:
        text: File contents (bytes or already-decoded text)

    Returns:
        Populated InstanceSpec with 0-based coordinates

    Raises:
        MissingFieldError, UnsupportedEdgeWeightTypeError, MalformedCoordError,
        DimensionMismatchError, InvalidDimensionError
    """
    header: Dict[str, str] = {}
    coord_lines: List[str] = []
    in_coords = False
    saw_coords = False

    for raw_line in _decode(text).splitlines():
        line = raw_line.strip()
        if not line:
            continue
        upper = line.upper()
        if upper == "EOF":
            break
        if upper.startswith(COORD_SECTION):
            in_coords = True
            saw_coords = True
            continue
        if any(upper.startswith(section) for section in UNSUPPORTED_SECTIONS):
            raise UnsupportedEdgeWeightTypeError(f"{upper.split()[0]} is not supported")
        if in_coords:
            coord_lines.append(line)
        else:
            key, value = _split_header(line)
            header[key] = value

    for field in REQUIRED_FIELDS:
        if field not in header:
            raise MissingFieldError(f"required field {field} is missing")
    if not saw_coords:
        raise MissingFieldError(f"required section {COORD_SECTION} is missing")

    dimension = _header_dimension(header)
    if dimension < 2:
        raise InvalidDimensionError(f"DIMENSION must be at least 2, got {dimension}")

    weight_name = header["EDGE_WEIGHT_TYPE"].upper()
    try:
        weight_type = EdgeWeightType(weight_name)
    except ValueError as exc:
        raise UnsupportedEdgeWeightTypeError(f"edge weight type {weight_name} is not supported") from exc

    if len(coord_lines) != dimension:
        raise DimensionMismatchError(
            f"DIMENSION is {dimension} but {len(coord_lines)} coordinate lines were found"
        )

    coords: List[Optional[Tuple[float, float]]] = [None] * dimension
    for line in coord_lines:
        parts = line.split()
        if len(parts) != 3:
            raise MalformedCoordError(f"expected 'index x y', got {line!r}")
        try:
            index = int(parts[0])
            x_val, y_val = float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise MalformedCoordError(f"non-numeric coordinate line {line!r}") from exc
        if not (math.isfinite(x_val) and math.isfinite(y_val)):
            raise MalformedCoordError(f"non-finite coordinate in line {line!r}")
        if not 1 <= index <= dimension:
            raise MalformedCoordError(f"node index {index} outside 1..{dimension}")
        if coords[index - 1] is not None:
            raise MalformedCoordError(f"node index {index} listed twice")
        coords[index - 1] = (x_val, y_val)

    spec = InstanceSpec(
        name=header["NAME"],
        dimension=dimension,
        edge_weight_type=weight_type,
        coords=coords,
    )
    logger.debug("Parsed instance %s (n=%d, %s)", spec.name, dimension, weight_type.value)
    return spec


def _nint(value: float) -> int:
    return int(value + 0.5)


def edge_weight(spec: InstanceSpec, i: int, j: int) -> int:
    """
    Integer TSPLIB distance between cities i and j (0-based).

    Raises:
        IndexOutOfRangeError: if i or j lies outside [0, dimension)
    """
    n = spec.dimension
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRangeError(f"city index ({i}, {j}) outside [0, {n})")
    if i == j:
        return 0
    xi, yi = spec.coords[i]
    xj, yj = spec.coords[j]
    dx = xi - xj
    dy = yi - yj

    if spec.edge_weight_type is EdgeWeightType.EUC_2D:
        return _nint(math.sqrt(dx * dx + dy * dy))
    if spec.edge_weight_type is EdgeWeightType.CEIL_2D:
        return int(math.ceil(math.sqrt(dx * dx + dy * dy)))
    # ATT pseudo-Euclidean
    r = math.sqrt((dx * dx + dy * dy) / 10.0)
    t = _nint(r)
    return t + 1 if t < r else t


def distance_matrix(spec: InstanceSpec) -> np.ndarray:
    """
    Vectorised edge_weight over all pairs, returned as float64 before integer conversion.

    Uses the same floating-point operations as edge_weight, so both agree bit for bit.
    """
    coords = np.asarray(spec.coords, dtype=np.float64)
    dx = coords[:, 0][:, None] - coords[:, 0][None, :]
    dy = coords[:, 1][:, None] - coords[:, 1][None, :]
    squared = dx * dx + dy * dy

    if spec.edge_weight_type is EdgeWeightType.EUC_2D:
        dist = np.floor(np.sqrt(squared) + 0.5)
    elif spec.edge_weight_type is EdgeWeightType.CEIL_2D:
        dist = np.ceil(np.sqrt(squared))
    else:
        r = np.sqrt(squared / 10.0)
        t = np.floor(r + 0.5)
        dist = np.where(t < r, t + 1.0, t)

    np.fill_diagonal(dist, 0.0)
    return dist


def serialize_instance(spec: InstanceSpec) -> bytes:
    """
    Canonical TSPLIB text for an instance; parse_instance reads it back unchanged.
    """
    lines = [
        f"NAME : {spec.name}",
        "TYPE : TSP",
        f"DIMENSION : {spec.dimension}",
        f"EDGE_WEIGHT_TYPE : {spec.edge_weight_type.value}",
        COORD_SECTION,
    ]
    # repr() round-trips every float exactly
    lines.extend(f"{index} {x!r} {y!r}" for index, (x, y) in enumerate(spec.coords, start=1))
    lines.append("EOF")
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_tour(text: Union[bytes, str], dimension: Optional[int] = None) -> List[int]:
    """
    Parse a TSPLIB tour file into a closed 0-based tour (last entry equals the first).

    Args:
        text: Tour file contents
        dimension: Expected city count; taken from the DIMENSION header when None

    Returns:
        List of n + 1 city indices
    """
    header: Dict[str, str] = {}
    nodes: List[int] = []
    in_tour = False
    for raw_line in _decode(text).splitlines():
        line = raw_line.strip()
        if not line:
            continue
        upper = line.upper()
        if upper == "EOF":
            break
        if upper.startswith(TOUR_SECTION):
            in_tour = True
            continue
        if not in_tour:
            key, value = _split_header(line)
            header[key] = value
            continue
        for token in line.split():
            try:
                node = int(token)
            except ValueError as exc:
                raise MalformedCoordError(f"non-integer tour entry {token!r}") from exc
            if node == -1:
                in_tour = False
                break
            nodes.append(node - 1)

    if not nodes:
        raise MissingFieldError(f"required section {TOUR_SECTION} is missing or empty")
    if dimension is None and "DIMENSION" in header:
        dimension = _header_dimension(header)
    if dimension is not None and len(nodes) != dimension:
        raise DimensionMismatchError(f"tour has {len(nodes)} entries, expected {dimension}")
    return nodes + [nodes[0]]


def _read_bytes(path: Union[str, Path]) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InstanceIOError(f"cannot read {path}: {exc.strerror or exc}") from exc


def load_instance(path: Union[str, Path]) -> InstanceSpec:
    """Read and parse a TSPLIB instance file."""
    spec = parse_instance(_read_bytes(path))
    logger.info("Loaded %s from %s (n=%d)", spec.name, path, spec.dimension)
    return spec


def load_tour(path: Union[str, Path], dimension: Optional[int] = None) -> List[int]:
    """Read and parse a TSPLIB tour file."""
    return parse_tour(_read_bytes(path), dimension)


__all__ = [
    "TsplibError",
    "parse_instance",
    "edge_weight",
    "distance_matrix",
    "serialize_instance",
    "parse_tour",
    "load_instance",
    "load_tour",
]
