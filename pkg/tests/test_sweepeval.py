import os
import tempfile
import unittest

import pandas as pd

from evaluation.sweepeval import PASSED, TABLE_NAME, build_df_sweeps, run_sweeps, save_sweep_table
from friezes import checks


class SweepEvalTestCase(unittest.TestCase):

    def test_table(self):
        df = build_df_sweeps(run_sweeps(range(3, 6), progress=False))
        self.assertEqual(list(df.index), [3, 4, 5])
        self.assertEqual(list(df[checks.CHECK_COUNT]), [1, 3, 11])
        self.assertEqual(list(df[PASSED]), [100.0, 100.0, 100.0])

    def test_empty_family_counts_as_passed(self):
        df = build_df_sweeps(run_sweeps([7], p=4, progress=False))
        self.assertEqual(df.loc[7, checks.CHECK_COUNT], 0)
        self.assertEqual(df.loc[7, PASSED], 100.0)

    def test_saved_csv(self):
        df = build_df_sweeps(run_sweeps(range(3, 5), p=3, progress=False))
        with tempfile.TemporaryDirectory() as tmp:
            save_sweep_table(df, tmp)
            loaded = pd.read_csv(os.path.join(tmp, f"{TABLE_NAME}.csv"), index_col=0)
            self.assertTrue(os.path.exists(os.path.join(tmp, f"{TABLE_NAME}.html")))
        self.assertEqual(list(loaded[checks.CHECK_TURN_COUNT]), [1, 2])


if __name__ == '__main__':
    unittest.main()
