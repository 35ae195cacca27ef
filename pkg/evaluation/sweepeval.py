"""
Sweep Evaluation

This script runs the recover∘Φ sweeps for a range of polygon sizes and produces one table
with a row per sweep and a column per check, plus the raw sweep records.

"""
from argparse import ArgumentParser
from pathlib import Path
from typing import Dict, Iterable, List

import pandas as pd

import friezes.checks as checks
from friezes import file_utils, get_logger
from friezes.sweep import KEY_N, KEY_P, passed, sweep

logger = get_logger(__name__)

TABLE_NAME = 'sweeps'
RAW_NAME = 'raw_sweeps.json'
PASSED = '% Passed'


def run_sweeps(n_values: Iterable[int], p: int = None, progress: bool = True) -> List[Dict]:
    return [sweep(n, p, progress=progress) for n in n_values]


def build_df_sweeps(records: List[Dict]) -> pd.DataFrame:
    """One row per sweep; the check columns in the order the sweeps record them."""
    df = pd.DataFrame.from_records(records)
    df[PASSED] = [100 * passed(r) / r[checks.CHECK_COUNT] if r[checks.CHECK_COUNT] else 100.0 for r in records]
    df[PASSED] = df[PASSED].round(2)
    df[checks.CHECK_SECONDS] = df[checks.CHECK_SECONDS].round(3)
    df[KEY_P] = df[KEY_P].astype('Int64')
    return df.set_index(KEY_N)


def save_sweep_table(df: pd.DataFrame, path: str) -> None:
    """Stores the sweep table as csv and html."""
    Path(path).mkdir(parents=True, exist_ok=True)
    df.to_csv(Path(path) / f'{TABLE_NAME}.csv')
    df.to_html(Path(path) / f'{TABLE_NAME}.html')
    logger.info(f'Saved sweep table into {path}/{TABLE_NAME}.csv and .html')


if __name__ == '__main__':
    parser = ArgumentParser()
    parser.add_argument("--n_min", type=int, default=3)
    parser.add_argument("--n_max", type=int, default=9,
                        help="Largest polygon size to sweep. Default: 9.")
    parser.add_argument("--p", type=int, help="Only sweep the p-angulations.")
    parser.add_argument("-r", "--results_path", type=str, default=file_utils.results_root(),
                        help="Folder to write the tables into. Default: results_eval")
    args = parser.parse_args()

    sweep_records = run_sweeps(range(args.n_min, args.n_max + 1), args.p)
    raw = file_utils.store_file(sweep_records, RAW_NAME, args.results_path)
    logger.info(f'Saved raw sweeps into {raw}')
    save_sweep_table(build_df_sweeps(sweep_records), args.results_path)
