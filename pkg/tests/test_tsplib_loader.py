"""
Unit tests for TSPLIB parsing and edge weights.
"""
import tempfile
import unittest
from pathlib import Path

import numpy as np

from src.data.generator import random_instance
from src.data.tsplib_loader import (
    distance_matrix,
    edge_weight,
    load_instance,
    load_tour,
    parse_instance,
    parse_tour,
    serialize_instance,
)
from src.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InstanceIOError,
    InvalidDimensionError,
    MalformedCoordError,
    MissingFieldError,
    UnsupportedEdgeWeightTypeError,
)
from src.models.aco_models import EdgeWeightType
from tests.support import ATT48, ATT48_OPTIMUM, ATT48_TOUR, att_oracle, make_spec


def tsp_text(coord_lines, dimension=None, weight_type="EUC_2D", extra=""):
    dimension = len(coord_lines) if dimension is None else dimension
    header = f"NAME : sample\nTYPE : TSP\nDIMENSION : {dimension}\nEDGE_WEIGHT_TYPE : {weight_type}\n{extra}"
    return header + "NODE_COORD_SECTION\n" + "\n".join(coord_lines) + "\nEOF\n"


class TestParseInstance(unittest.TestCase):
    """Test suite for parse_instance."""

    def test_minimal_euc_2d(self):
        """Test a minimal EUC_2D file."""
        spec = parse_instance(tsp_text(["1 0 0", "2 3 4", "3 6 8"]).encode())

        self.assertEqual(spec.name, "sample")
        self.assertEqual(spec.dimension, 3)
        self.assertEqual(spec.edge_weight_type, EdgeWeightType.EUC_2D)
        self.assertEqual(spec.coords, [(0.0, 0.0), (3.0, 4.0), (6.0, 8.0)])

    def test_att48(self):
        """Test the bundled att48 file."""
        spec = load_instance(ATT48)

        self.assertEqual(spec.dimension, 48)
        self.assertEqual(spec.edge_weight_type, EdgeWeightType.ATT)
        self.assertEqual(spec.coords[0], (6734.0, 1453.0))
        self.assertEqual(spec.coords[47], (3023.0, 1942.0))

    def test_indices_placed_by_node_number(self):
        """Test that node numbers, not line order, place cities."""
        spec = parse_instance(tsp_text(["2 3 4", "1 0 0"]))
        self.assertEqual(spec.coords, [(0.0, 0.0), (3.0, 4.0)])

    def test_missing_eof_tolerated(self):
        """Test a file without EOF."""
        text = tsp_text(["1 0 0", "2 1 1"]).replace("EOF\n", "")
        self.assertEqual(parse_instance(text).dimension, 2)

    def test_dimension_mismatch(self):
        """Test DimensionMismatchError."""
        lines = ["1 0 0", "2 1 1", "3 2 2", "4 3 3"]
        with self.assertRaises(DimensionMismatchError):
            parse_instance(tsp_text(lines, dimension=5))

    def test_missing_fields(self):
        """Test MissingFieldError."""
        text = "NAME : x\nDIMENSION : 2\nNODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n"
        with self.assertRaises(MissingFieldError):
            parse_instance(text)
        text = "NAME : x\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : EUC_2D\nEOF\n"
        with self.assertRaises(MissingFieldError):
            parse_instance(text)

    def test_unsupported_types(self):
        """Test UnsupportedEdgeWeightTypeError."""
        with self.assertRaises(UnsupportedEdgeWeightTypeError):
            parse_instance(tsp_text(["1 0 0", "2 1 1"], weight_type="GEO"))
        with self.assertRaises(UnsupportedEdgeWeightTypeError):
            parse_instance(tsp_text(["1 0 0", "2 1 1"], weight_type="EXPLICIT",
                                    extra="EDGE_WEIGHT_SECTION\n0 1\n1 0\n"))

    def test_malformed_coordinates(self):
        """Test MalformedCoordError."""
        for bad in (["1 0 x", "2 1 1"], ["1 0", "2 1 1"], ["1 0 0 5", "2 1 1"],
                    ["1 0 0", "7 1 1"], ["1 0 0", "1 1 1"], ["1 nan 0", "2 1 1"]):
            with self.subTest(lines=bad):
                with self.assertRaises(MalformedCoordError):
                    parse_instance(tsp_text(bad))

    def test_invalid_dimension(self):
        """Test InvalidDimensionError."""
        with self.assertRaises(InvalidDimensionError):
            parse_instance(tsp_text(["1 0 0"]))
        with self.assertRaises(InvalidDimensionError):
            parse_instance(tsp_text(["1 0 0", "2 1 1"], dimension="two"))

    def test_unreadable_file(self):
        """Test InstanceIOError."""
        with self.assertRaises(InstanceIOError):
            load_instance(Path("/nonexistent/instance.tsp"))

    def test_serialize_round_trip(self):
        """Test serialize_instance against parse_instance."""
        spec = random_instance(25, seed=11, integral=False)
        again = parse_instance(serialize_instance(spec))
        self.assertEqual(again, spec)
        self.assertEqual(serialize_instance(again), serialize_instance(spec))


class TestEdgeWeight(unittest.TestCase):
    """Test suite for edge_weight and distance_matrix."""

    def test_euc_2d_pythagorean(self):
        """Test a 3-4-5 EUC_2D distance."""
        spec = make_spec([(0, 0), (3, 4)])
        self.assertEqual(edge_weight(spec, 0, 1), 5)

    def test_rounding_rules(self):
        """Test EUC_2D, CEIL_2D and ATT rounding."""
        euc = make_spec([(0, 0), (1, 1)])
        ceil = make_spec([(0, 0), (1, 1)], EdgeWeightType.CEIL_2D)
        self.assertEqual(edge_weight(euc, 0, 1), 1)
        self.assertEqual(edge_weight(ceil, 0, 1), 2)

    def test_att_self_distance(self):
        """Test that the ATT self-distance is 0."""
        spec = make_spec([(10, 20), (30, 40)], EdgeWeightType.ATT)
        self.assertEqual(edge_weight(spec, 1, 1), 0)

    def test_index_out_of_range(self):
        """Test IndexOutOfRangeError."""
        spec = make_spec([(0, 0), (3, 4)])
        with self.assertRaises(IndexOutOfRangeError):
            edge_weight(spec, 0, 2)
        with self.assertRaises(IndexOutOfRangeError):
            edge_weight(spec, -1, 0)

    def test_att48_matches_oracle(self):
        """Test att48 distances against the pseudo-Euclidean oracle."""
        spec = load_instance(ATT48)
        matrix = distance_matrix(spec)
        for i in range(48):
            for j in range(48):
                expected = 0 if i == j else att_oracle(spec.coords[i], spec.coords[j])
                self.assertEqual(edge_weight(spec, i, j), expected)
                self.assertEqual(edge_weight(spec, j, i), expected)
                self.assertEqual(matrix[i, j], expected)

    def test_vectorised_matches_scalar(self):
        """Test that distance_matrix equals edge_weight."""
        for weight_type in EdgeWeightType:
            spec = random_instance(30, seed=5, edge_weight_type=weight_type, integral=False)
            matrix = distance_matrix(spec)
            scalar = np.array([[edge_weight(spec, i, j) for j in range(30)] for i in range(30)])
            np.testing.assert_array_equal(matrix, scalar)

    def test_att48_optimal_tour_length(self):
        """Test the att48 optimal tour length."""
        spec = load_instance(ATT48)
        tour = load_tour(ATT48_TOUR)

        self.assertEqual(len(tour), 49)
        self.assertEqual(tour[0], tour[-1])
        self.assertEqual(sorted(tour[:-1]), list(range(48)))
        length = sum(att_oracle(spec.coords[a], spec.coords[b]) for a, b in zip(tour, tour[1:]))
        self.assertEqual(length, ATT48_OPTIMUM)


class TestParseTour(unittest.TestCase):
    """Test suite for parse_tour."""

    def test_closed_zero_based(self):
        """Test a closed 0-based tour."""
        text = "NAME : t\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n1\n3\n2\n-1\nEOF\n"
        self.assertEqual(parse_tour(text), [0, 2, 1, 0])

    def test_wrong_count(self):
        """Test DimensionMismatchError for tours."""
        text = "TOUR_SECTION\n1 2\n-1\n"
        with self.assertRaises(DimensionMismatchError):
            parse_tour(text, dimension=3)

    def test_missing_section(self):
        """Test a tour file without TOUR_SECTION."""
        with self.assertRaises(MissingFieldError):
            parse_tour("NAME : t\nEOF\n")

    def test_malformed_dimension_header(self):
        """Test that a non-integer DIMENSION header raises InvalidDimensionError."""
        with self.assertRaises(InvalidDimensionError):
            parse_tour("NAME : t\nDIMENSION : three\nTOUR_SECTION\n1\n3\n2\n-1\nEOF\n")

    def test_load_tour_from_file(self):
        """Test load_tour."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "t.tour"
            path.write_text("TOUR_SECTION\n2 1\n-1\nEOF\n")
            self.assertEqual(load_tour(path), [1, 0, 1])


if __name__ == '__main__':
    unittest.main()
