# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Run configuration, assembled from command line options and the environment """

from dataclasses import dataclass, replace
import os
from typing import Any, Mapping, Optional

from pairdom.common.errors import PairdomInputError
from pairdom.common.matching import DEFAULT_MATCHING_MAX_VERTICES

ORACLE_MAX_ENV = "PAIRDOM_ORACLE_MAX"


@dataclass(frozen=True)
class Config:  # pylint: disable=too-many-instance-attributes
    """ Options shared by all commands """
    oracle_max_vertices: int = 16
    oracle_max_subsets: int = 2 ** 22
    matching_max_vertices: int = DEFAULT_MATCHING_MAX_VERTICES
    output_json: bool = False
    logfile: Optional[str] = None
    verbose: bool = False
    debug: bool = False


def _positive_int(value: Any, name: str) -> int:
    try:
        result = int(value)
    except (TypeError, ValueError) as err:
        raise PairdomInputError(f"{name} must be an integer, not {value!r}") from err
    if result < 1:
        raise PairdomInputError(f"{name} must be positive, not {result}")
    return result


def build_config(options: Any = None, environ: Optional[Mapping[str, str]] = None) -> Config:
    """ Builds a Config. Environment values override defaults, and explicit
        command line options override the environment.

        Arguments:
            options: an argparse namespace or similar, attributes are optional
            environ: the environment to read, os.environ if not given

        Returns:
            the resulting Config
    """
    if environ is None:
        environ = os.environ
    config = Config()
    if environ.get(ORACLE_MAX_ENV):
        config = replace(config, oracle_max_vertices=_positive_int(environ[ORACLE_MAX_ENV],
                                                                   ORACLE_MAX_ENV))
    if options is None:
        return config

    updates = {}
    max_vertices = getattr(options, "max_vertices", None)
    if max_vertices is not None:
        updates["oracle_max_vertices"] = _positive_int(max_vertices, "--max-vertices")
    max_subsets = getattr(options, "max_subsets", None)
    if max_subsets is not None:
        updates["oracle_max_subsets"] = _positive_int(max_subsets, "--max-subsets")
    max_matching = getattr(options, "max_matching_vertices", None)
    if max_matching is not None:
        updates["matching_max_vertices"] = _positive_int(max_matching, "--max-matching-vertices")
    for name in ["output_json", "verbose", "debug"]:
        value = getattr(options, name, None)
        if value is not None:
            updates[name] = bool(value)
    logfile = getattr(options, "logfile", None)
    if logfile:
        updates["logfile"] = logfile
    return replace(config, **updates)
