""" Command implementations behind scripts/cli.py; every command returns its exit code """
import functools
from datetime import datetime
from typing import List, Optional, Sequence

from friezes import get_logger
from friezes import checks, file_utils
from friezes import sweep as sweeps
from friezes.dissection_frieze import phi, recovery_report
from friezes.errors import (EXIT_INVALID, EXIT_OK, FriezeError, InvalidQuiddityError, NotAFriezeError,
                            ParseError, PositivityError, UsageError)
from friezes.farey import RenderOptions, closed_path_check, render_farey_svg, turn_count_check
from friezes.frieze import (Frieze, QuiddityRow, format_element, frieze_from_quiddity, matrix_word,
                            quiddity_of, render_pattern_text)
from friezes.polygon import Dissection
from friezes.ring import context_create, integer_multiple_of_lambda

logger = get_logger(__name__)
stdout_logger = get_logger("friezes.run")


def command(fn):
    """ logs timing and turns FriezeErrors into their exit codes """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> int:
        time_start = datetime.now()
        try:
            exit_code = fn(*args, **kwargs)
        except FriezeError as e:
            stdout_logger.error(f"Error: {e}")
            logger.error(e, exc_info=True)
            return e.exit_code
        time_end = datetime.now()
        logger.info(f"Command {fn.__name__} took {str(time_end - time_start)}")
        return exit_code

    return wrapper


def _emit_json(data, out: Optional[str] = None):
    if out:
        fp = file_utils.store_to(file_utils.dumps_canonical(data), out)
        logger.info("Stored %s", fp)
    else:
        stdout_logger.info(file_utils.dumps_canonical(data).rstrip("\n"))


def _format_row(entries) -> str:
    return "(" + ", ".join(format_element(t) for t in entries) + ")"


@command
def build(dissection_file: str, render: str = None, quiddity: bool = False, out: str = None,
          periods: int = 1) -> int:
    dissection = Dissection.from_dict(file_utils.load_json(dissection_file))
    frieze = phi(dissection)
    _emit_json(frieze.to_dict(), out)
    if render == "text":
        stdout_logger.info(render_pattern_text(frieze, periods).rstrip("\n"))
    if quiddity:
        stdout_logger.info(_format_row(quiddity_of(frieze).entries))
    return EXIT_OK


@command
def recover(frieze_file: str, out: str = None) -> int:
    frieze = Frieze.from_dict(file_utils.load_json(frieze_file))
    report = recovery_report(frieze)
    if report.dissection is not None:
        _emit_json(report.dissection.to_dict(), out)
    stdout_logger.info(file_utils.dumps_canonical(report.to_dict()).rstrip("\n"))
    return EXIT_OK if report.in_image else EXIT_INVALID


def validation_report(row: QuiddityRow) -> dict:
    """ closure, positivity, matrix word and the types Λ_p for p >= 3 dividing L """
    closes = matrix_word(row).is_minus_identity()
    positive = None
    try:
        frieze_from_quiddity(row)
        positive = True
    except NotAFriezeError:
        pass
    except PositivityError:
        positive = False
    level = row.context.level
    types = {}
    for p in range(3, level + 1):
        if level % p == 0:
            q_list = [integer_multiple_of_lambda(t, p) for t in row.entries]
            types[str(p)] = None if None in q_list else q_list
    return {"valid": bool(closes and positive), "closure": closes, "positivity": positive,
            "matrix_word": closes, "types": types}


@command
def validate(quiddity_file: str) -> int:
    row = QuiddityRow.from_dict(file_utils.load_json(quiddity_file))
    report = validation_report(row)
    stdout_logger.info(file_utils.dumps_canonical(report).rstrip("\n"))
    return EXIT_OK


@command
def enumerate_family(n_vertices: int, p: int = None, count_only: bool = False, progress: bool = True) -> int:
    """ the size of the family, or the recover∘Φ sweep over it """
    if n_vertices < 3:
        raise UsageError(f"A polygon has at least 3 vertices, but --n is {n_vertices}")
    if p is not None and p < 3:
        raise UsageError(f"Cells have at least 3 vertices, but --p is {p}")
    if count_only:
        stdout_logger.info(str(sweeps.count(n_vertices, p)))
        return EXIT_OK
    results = sweeps.sweep(n_vertices, p, progress=progress)
    failed = results[checks.CHECK_FAILED]
    stdout_logger.info(f"{sweeps.passed(results)} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_INVALID


def parse_q_list(text: str) -> List[int]:
    try:
        return [int(q) for q in text.split(",") if q.strip()]
    except ValueError as e:
        raise ParseError(f"Cannot read '{text}' as comma-separated integers. "
                         f"Check --q and try again.") from e


@command
def farey(p: int, quiddity_file: str = None, q_list: Sequence[int] = None, q_text: str = None,
          svg: str = None, options: RenderOptions = None) -> int:
    if q_text is not None:
        q_list = parse_q_list(q_text)
    if quiddity_file:
        row = QuiddityRow.from_dict(file_utils.load_json(quiddity_file))
        ctx = row.context
        q_list = [integer_multiple_of_lambda(t, p) for t in row.entries]
        if None in q_list:
            raise InvalidQuiddityError(f"The quiddity row {_format_row(row.entries)} is not of type Λ_{p}")
    else:
        ctx = context_create(p)
    q_list = list(q_list)
    closed = closed_path_check(ctx, q_list, p)
    stdout_logger.info(f"closed: {'yes' if closed else 'no'}")
    turns = False
    if closed:
        try:
            turns = turn_count_check(ctx, q_list, p)
        except FriezeError as e:
            logger.warning("Turn count check raised: %s", e)
    stdout_logger.info(f"turns: {'yes' if turns else 'no'}")
    if svg:
        if closed:
            fp = file_utils.store_to(render_farey_svg(ctx, q_list, p, options), svg)
            logger.info("Stored %s", fp)
        else:
            stdout_logger.warning("Not writing %s: the path does not close up", svg)
    return EXIT_OK if closed and turns else EXIT_INVALID
