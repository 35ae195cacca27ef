import unittest

from friezes import checks
from friezes.polygon import Dissection
from friezes.sweep import KEY_N, KEY_P, check_dissection, count, expected_count, passed, sweep


class SweepTestCase(unittest.TestCase):

    def test_all_dissections_of_the_pentagon(self):
        results = sweep(5, progress=False)
        self.assertEqual(results[KEY_N], 5)
        self.assertIsNone(results[KEY_P])
        self.assertEqual(results[checks.CHECK_COUNT], 11)
        self.assertEqual(results[checks.CHECK_EXPECTED_COUNT], 11)
        self.assertEqual(results[checks.CHECK_FAILED], 0)
        for name in checks.ROUNDTRIP_CHECKS:
            self.assertEqual(results[name], 11, name)
        self.assertEqual(passed(results), 11)
        self.assertGreaterEqual(results[checks.CHECK_SECONDS], 0)

    def test_quadrangulations_of_the_octagon(self):
        results = sweep(8, 4, progress=False)
        self.assertEqual(results[checks.CHECK_COUNT], 12)
        self.assertEqual(results[checks.CHECK_FAILED], 0)
        for name in checks.P_ANGULATION_CHECKS:
            self.assertEqual(results[name], 12, name)

    def test_pentangulations_of_the_11_gon(self):
        results = sweep(11, 5, progress=False)
        self.assertEqual(results[checks.CHECK_COUNT], 22)
        self.assertEqual(results[checks.CHECK_EXPECTED_COUNT], 22)
        self.assertEqual(results[checks.CHECK_FAILED], 0)
        self.assertEqual(results[checks.CHECK_TURN_COUNT], 22)
        self.assertEqual(results[checks.CHECK_CLOSED_PATH], 22)

    def test_all_dissections_of_the_heptagon_and_octagon(self):
        for n, total in ((7, 197), (8, 903)):
            results = sweep(n, progress=False)
            self.assertEqual(results[checks.CHECK_COUNT], total)
            self.assertEqual(results[checks.CHECK_FAILED], 0)
            for name in checks.ROUNDTRIP_CHECKS:
                self.assertEqual(results[name], total, (n, name))

    def test_empty_family(self):
        results = sweep(7, 4, progress=False)
        self.assertEqual(results[checks.CHECK_COUNT], 0)
        self.assertEqual(results[checks.CHECK_EXPECTED_COUNT], 0)
        self.assertEqual(passed(results), 0)

    def test_ten_gon(self):
        outcomes = check_dissection(Dissection.create(10, [(1, 4), (4, 9), (5, 8)]), 4)
        self.assertEqual(set(outcomes), set(checks.P_ANGULATION_CHECKS))
        self.assertTrue(all(outcomes.values()))

    def test_wrong_type(self):
        outcomes = check_dissection(Dissection.create(6, [(0, 3)]), 3)
        self.assertFalse(outcomes[checks.CHECK_TYPE])
        self.assertTrue(outcomes[checks.CHECK_ROUNDTRIP])

    def test_counts(self):
        self.assertEqual(count(6, 3), 14)
        self.assertEqual(count(6), 45)
        self.assertEqual(expected_count(10, 4), 55)
        self.assertEqual(expected_count(9), 4279)


if __name__ == '__main__':
    unittest.main()
