"""
Exhaustive desk-scale sweeps: Φ and its inverse over every dissection (or p-angulation) of an N-gon.
"""
from datetime import datetime
from typing import Dict, Iterator, List, Optional

from tqdm import tqdm

from friezes import get_logger
from friezes import checks
from friezes.dissection_frieze import (integrality_check, ones_are_diagonals_check, p_angulation_from_quiddity, phi,
                                       quiddity_sum_check, recover_dissection)
from friezes.errors import FriezeError
from friezes.farey import closed_path_check, turn_count_check
from friezes.frieze import frieze_type, matrix_word_check, validate_frieze
from friezes.polygon import (Dissection, count_dissections, enumerate_dissections, enumerate_p_angulations,
                             fuss_catalan)

logger = get_logger(__name__)

KEY_N = "N"
KEY_P = "p"


def family(n_vertices: int, p: int = None) -> Iterator[Dissection]:
    if p is None:
        return enumerate_dissections(n_vertices)
    return enumerate_p_angulations(n_vertices, p)


def expected_count(n_vertices: int, p: int = None) -> int:
    if p is None:
        return count_dissections(n_vertices)
    if (n_vertices - 2) % (p - 2):
        return 0
    return fuss_catalan((n_vertices - 2) // (p - 2), p)


def check_dissection(dissection: Dissection, p: int = None) -> Dict[str, bool]:
    """ the outcome of every check on Φ(D); p-angulation checks only when p is given """
    f = phi(dissection)
    outcomes = {
        checks.CHECK_ROUNDTRIP: recover_dissection(f) == dissection,
        checks.CHECK_MATRIX_WORD: matrix_word_check(f),
        checks.CHECK_PTOLEMY: validate_frieze(f).ok,
        checks.CHECK_INTEGRAL: integrality_check(f),
        checks.CHECK_ONES: ones_are_diagonals_check(f, dissection),
        checks.CHECK_QUIDDITY_SUM: quiddity_sum_check(f, dissection),
    }
    if p is not None:
        q_list = frieze_type(f, p)
        outcomes[checks.CHECK_TYPE] = q_list is not None
        if q_list is None:
            outcomes.update({checks.CHECK_RECONSTRUCTION: False, checks.CHECK_CLOSED_PATH: False,
                             checks.CHECK_TURN_COUNT: False})
        else:
            outcomes[checks.CHECK_RECONSTRUCTION] = p_angulation_from_quiddity(q_list, p, f.context) == dissection
            outcomes[checks.CHECK_CLOSED_PATH] = closed_path_check(f.context, q_list, p)
            outcomes[checks.CHECK_TURN_COUNT] = turn_count_check(f.context, q_list, p)
    return outcomes


def sweep(n_vertices: int, p: int = None, progress: bool = True) -> Dict:
    """
    Runs check_dissection over the whole family and counts the passes per check.
    A dissection fails when any check is false or a FriezeError is raised.
    """
    names: List[str] = checks.P_ANGULATION_CHECKS if p is not None else checks.ROUNDTRIP_CHECKS
    results = {KEY_N: n_vertices, KEY_P: p, checks.CHECK_COUNT: 0,
               checks.CHECK_EXPECTED_COUNT: expected_count(n_vertices, p), checks.CHECK_FAILED: 0}
    results.update({name: 0 for name in names})
    description = f"{n_vertices}-gon" + (f", p={p}" if p is not None else "")
    time_start = datetime.now()
    for dissection in tqdm(family(n_vertices, p), desc=description, total=results[checks.CHECK_EXPECTED_COUNT],
                           disable=not progress, leave=False):
        results[checks.CHECK_COUNT] += 1
        try:
            outcomes = check_dissection(dissection, p)
        except FriezeError as e:
            logger.error("Checks raised on %s: %s", dissection.to_dict(), e, exc_info=True)
            results[checks.CHECK_FAILED] += 1
            continue
        for name, ok in outcomes.items():
            results[name] += int(ok)
        if not all(outcomes.values()):
            failed = [name for name, ok in outcomes.items() if not ok]
            logger.warning("Dissection %s failed %s", dissection.to_dict(), failed)
            results[checks.CHECK_FAILED] += 1
    time_end = datetime.now()
    results[checks.CHECK_SECONDS] = (time_end - time_start).total_seconds()
    logger.info(f"Sweep over the {description} took {str(time_end - time_start)}")
    return results


def passed(results: Dict) -> int:
    return results[checks.CHECK_COUNT] - results[checks.CHECK_FAILED]


def count(n_vertices: int, p: Optional[int] = None) -> int:
    return sum(1 for _ in family(n_vertices, p))
