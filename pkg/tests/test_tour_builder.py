"""
Unit tests for tour construction.
"""
import unittest

import numpy as np

from src.construction import PheromoneWeights, build_selector, construct_tour, new_ant, start_city
from src.construction.base import SelectionStats
from src.data.generator import random_instance
from src.errors import ConfigError
from src.models.aco_models import SelectionStrategy, SelectionVariant
from src.models.problem import (
    build_nn_lists,
    build_problem,
    compute_choice_info,
    initial_pheromone,
    tour_length,
    validate_tour,
)
from tests.support import make_spec, oracle_roulette_tour


def setup_instance(n, seed):
    problem = build_problem(random_instance(n, seed=seed))
    tau = initial_pheromone(problem, n)
    return problem, compute_choice_info(tau, problem, 1.0, 2.0)


def selector_for(variant, problem, nn_lists, theta):
    weights = PheromoneWeights.of(initial_pheromone(problem, problem.n), problem, 1.0, 2.0)
    return build_selector(SelectionStrategy(variant=variant, tile_size=theta), nn_lists, weights)


class TestConstructTour(unittest.TestCase):
    """Test suite for construct_tour."""

    def test_two_cities(self):
        """Test that every strategy closes the only possible 2-city tour."""
        problem = build_problem(make_spec([(0, 0), (3, 4)]))
        choice = compute_choice_info(initial_pheromone(problem, 2), problem, 1.0, 2.0)
        for variant in SelectionVariant:
            if variant is SelectionVariant.ROULETTE_NN:
                nn_lists = build_nn_lists(problem, 1)
            else:
                nn_lists = None
            selector = selector_for(variant, problem, nn_lists, 4)
            for start in (0, 1):
                ant = construct_tour(problem, choice, nn_lists, selector, new_ant(start, 2, 1, 1), start)
                self.assertEqual(list(ant.tour), [start, 1 - start, start])
                self.assertEqual(ant.length, 10)

    def test_every_strategy_builds_permutations(self):
        """Test that every strategy builds valid closed permutations from k mod n."""
        for seed in range(3):
            problem, choice = setup_instance(25, seed)
            nn_lists = build_nn_lists(problem, 5)
            for variant in SelectionVariant:
                selector = selector_for(variant, problem, nn_lists, 7)
                counters = SelectionStats()
                for k in range(10):
                    ant = new_ant(k, 25, seed, 1)
                    construct_tour(problem, choice, nn_lists, selector, ant, start_city(ant), counters)
                    validate_tour(25, ant.tour)
                    self.assertEqual(ant.tour[0], k % 25)
                    self.assertTrue(ant.tabu.all_visited())
                    self.assertEqual(ant.length, tour_length(problem, ant.tour))

    def test_matches_straight_line_oracle(self):
        """Test 1000 tours against the straight-line oracle."""
        problem, choice = setup_instance(10, 4)
        selector = build_selector(SelectionStrategy(variant=SelectionVariant.ROULETTE_FULL))
        lengths, oracle_lengths = [], []
        for k in range(1000):
            ant = new_ant(k, 10, 77, 1)
            construct_tour(problem, choice, None, selector, ant, k % 10)
            expected = oracle_roulette_tour(choice.value, 10, 77, 1, k, k % 10)
            self.assertEqual(list(ant.tour), expected)
            lengths.append(ant.length)
            oracle_lengths.append(tour_length(problem, expected))
        self.assertLessEqual(abs(np.mean(lengths) - np.mean(oracle_lengths)), 0.02 * np.mean(oracle_lengths))

    def test_ant_must_be_fresh(self):
        """Test that a placed ant is rejected."""
        problem, choice = setup_instance(6, 0)
        strategy = SelectionStrategy()
        ant = construct_tour(problem, choice, None, strategy, new_ant(0, 6, 1, 1), 0)
        with self.assertRaises(ValueError):
            construct_tour(problem, choice, None, strategy, ant, 0)

    def test_nn_strategy_needs_lists(self):
        """Test that nn selection needs neighbour lists."""
        with self.assertRaises(ConfigError):
            build_selector(SelectionStrategy(variant=SelectionVariant.ROULETTE_NN))

    def test_recompute_strategy_needs_weights(self):
        """Test that the recomputing roulette cannot be built without the live pheromone."""
        with self.assertRaises(ConfigError):
            build_selector(SelectionStrategy(variant=SelectionVariant.ROULETTE_RECOMPUTE))

    def test_random_start_is_reproducible(self):
        """Test random start cities."""
        starts = [start_city(new_ant(k, 30, 5, 2), random_start=True) for k in range(60)]
        again = [start_city(new_ant(k, 30, 5, 2), random_start=True) for k in range(60)]
        self.assertEqual(starts, again)
        self.assertTrue(all(0 <= s < 30 for s in starts))
        self.assertGreater(len(set(starts)), 1)


if __name__ == '__main__':
    unittest.main()
