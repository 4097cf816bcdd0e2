"""Fixed points and epsilon-nets for sigma-stable maps on finite probability spaces.

Scenarios are dicts (or paths to JSON files) in the same schema the ``l0kit``
command line tool reads. Every call returns the report dict; ``report["exit_code"]``
follows the command line convention (0 ok, 1 solver failure, 2 bad input,
3 unsupported). Malformed scenarios raise :class:`Error`.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Optional, Union

from . import _l0kit
from ._l0kit import SCHEMA_VERSION, Error

__all__ = [
    "Error",
    "SCHEMA_VERSION",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_BAD_INPUT",
    "EXIT_UNSUPPORTED",
    "load",
    "run",
    "oracle",
    "net",
    "builtin_suite",
    "builtin_contraction_suite",
    "builtin_splitting_suite",
]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_UNSUPPORTED = 3

Scenario = Union[Mapping[str, Any], str, "os.PathLike[str]"]


def load(path: Union[str, "os.PathLike[str]"]) -> dict:
    """Reads a scenario file and checks it against the schema."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    _l0kit.validate(text)
    return json.loads(text)


def _text(scenario: Scenario) -> str:
    if isinstance(scenario, (str, os.PathLike)):
        with open(scenario, encoding="utf-8") as fh:
            return fh.read()
    return json.dumps(scenario)


def run(scenario: Scenario, *, seed: Optional[int] = None) -> dict:
    report, _ = _l0kit.run(_text(scenario), seed)
    return json.loads(report)


def oracle(scenario: Scenario, *, seed: Optional[int] = None) -> dict:
    report, _ = _l0kit.oracle(_text(scenario), seed)
    return json.loads(report)


def net(scenario: Scenario, *, eps: Optional[float] = None, samples: int = 10000,
        seed: Optional[int] = None) -> dict:
    report, _ = _l0kit.net(_text(scenario), eps, samples, seed)
    return json.loads(report)


def builtin_suite() -> list:
    return [json.loads(s) for s in _l0kit.builtin_suite()]


def builtin_contraction_suite() -> list:
    return [json.loads(s) for s in _l0kit.builtin_contraction_suite()]


def builtin_splitting_suite() -> list:
    return [json.loads(s) for s in _l0kit.builtin_splitting_suite()]
