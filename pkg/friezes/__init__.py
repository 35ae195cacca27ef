import os
import logging
import logging.config
from dataclasses import dataclass
from typing import Mapping

import yaml

project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Configure logging
with open(os.path.join(project_root, "logging.yaml")) as f:
    conf = yaml.safe_load(f)
    log_fn = conf["handlers"]["file_handler"]["filename"]
    log_fn = os.path.join(project_root, log_fn)
    conf["handlers"]["file_handler"]["filename"] = log_fn
    logging.config.dictConfig(conf)


def get_logger(name):
    return logging.getLogger(name)


ENV_PRECISION_START = "FRIEZE_PRECISION_START"
ENV_DEBUG = "FRIEZE_DEBUG"


@dataclass(frozen=True)
class Settings:
    """
    Process-wide settings, read once from the environment.

    precision_start: bits of working precision for the first sign-determination attempt
    debug: recompute friezes from every base vertex and validate every glued frieze
    """
    precision_start: int = 64
    debug: bool = False


def load_settings(environ: Mapping[str, str] = None) -> Settings:
    environ = os.environ if environ is None else environ
    precision_start = Settings.precision_start
    if environ.get(ENV_PRECISION_START):
        try:
            precision_start = int(environ[ENV_PRECISION_START])
        except ValueError:
            raise ValueError(f"{ENV_PRECISION_START} must be an integer, "
                             f"but is '{environ[ENV_PRECISION_START]}'. Check your environment and try again.")
        if precision_start < 2:
            raise ValueError(f"{ENV_PRECISION_START} must be at least 2, but is {precision_start}.")
    debug = environ.get(ENV_DEBUG, "").strip().lower() in ("1", "true", "yes")
    return Settings(precision_start=precision_start, debug=debug)


settings = load_settings()
