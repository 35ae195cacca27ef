"""
Exceptions raised by the frieze library.

Every exception carries the exit code the command line uses when it ends a command:
1 for usage errors, 2 for unreadable input, 3 for mathematical invalidity.
"""
from typing import List, Tuple

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


class FriezeError(Exception):
    exit_code: int = EXIT_INVALID


class UsageError(FriezeError):
    exit_code = EXIT_USAGE


class ParseError(FriezeError):
    """
    An input file or argument could not be turned into a domain object:
    malformed JSON, coefficient vectors of the wrong length, crossing or duplicate diagonals.
    """
    exit_code = EXIT_PARSE


# exact ring

class InvalidLevelError(FriezeError, ValueError):
    exit_code = EXIT_USAGE


class IncompatibleLevelError(FriezeError, ValueError):
    """ λ_p is only available in a field ℚ(λ_L) with p dividing L """
    exit_code = EXIT_USAGE


class ContextMismatchError(FriezeError, TypeError):
    exit_code = EXIT_USAGE


class RingDivisionError(FriezeError, ZeroDivisionError):
    pass


# polygon

class InvalidVertexError(FriezeError, ValueError):
    exit_code = EXIT_USAGE


class InvalidDiagonalError(FriezeError, ValueError):
    pass


class InvalidDissectionError(FriezeError, ValueError):
    pass


# frieze

class NotAFriezeError(FriezeError):
    """ The sequence is not the quiddity row of any frieze: the continuant recurrence does not close up. """
    pass


class PositivityError(FriezeError):
    """ The recurrence closes up, but an interior entry is not positive. """
    pass


class OutOfStripError(FriezeError, IndexError):
    exit_code = EXIT_USAGE


# dissection frieze

class GlueSpecError(FriezeError, ValueError):
    pass


class NotInImageError(FriezeError):
    """
    The frieze is not Φ of any dissection (or not of a p-angulation, when a type was requested).
    """
    ones: List[Tuple[int, int]] = list()

    def __init__(self, info_str: str = "Frieze is not in the image", ones: List[Tuple[int, int]] = None):
        super().__init__(info_str)
        self.ones = list(ones) if ones else list()


class InternalDisagreementError(FriezeError, AssertionError):
    """
    The gluing construction and the quiddity construction of Φ(D) differ.
    This indicates a bug and is never expected.
    """
    pass


# farey

class InvalidQuiddityError(FriezeError, ValueError):
    pass
