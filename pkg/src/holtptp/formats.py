"""The eight output formats by name, and a single entry point to run one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List

from .problems import HolProblem
from .semantic import to_fof_ii, to_tf0_ii, to_th0_ii
from .syntactic.fof import to_fof1
from .syntactic.special import to_tf01, to_th01
from .syntactic.tf1 import to_tf1
from .syntactic.th1 import to_th1
from .tptp.ast import Dialect, TptpProblem
from .tptp.printer import print_problem


@dataclass(frozen=True)
class Format:
    name: str
    dialect: Dialect
    build: Callable[..., TptpProblem]
    takes_special_types: bool = False


FORMATS: Dict[str, Format] = {
    f.name: f
    for f in (
        Format("th1-i", Dialect.TH1, to_th1),
        Format("tf1-i", Dialect.TF1, to_tf1),
        Format("fof-i", Dialect.FOF, to_fof1),
        Format("tf0-i", Dialect.TF0, to_tf01),
        Format("th0-i", Dialect.TH0, to_th01),
        Format("th0-ii", Dialect.TH0, to_th0_ii, True),
        Format("tf0-ii", Dialect.TF0, to_tf0_ii, True),
        Format("fof-ii", Dialect.FOF, to_fof_ii),
    )
}
FORMAT_NAMES = tuple(FORMATS)


def expand_formats(selector: str) -> List[str]:
    """``all`` or a single format name; raises ValueError otherwise."""
    if selector == "all":
        return list(FORMAT_NAMES)
    if selector not in FORMATS:
        raise ValueError(f"unknown format {selector!r}; choose from {', '.join(FORMAT_NAMES)} or all")
    return [selector]


def translate(problem: HolProblem, fmt: str, special_types: bool = True) -> TptpProblem:
    f = FORMATS[fmt]
    if f.takes_special_types:
        return f.build(problem, special_types)
    return f.build(problem)


def translate_text(problem: HolProblem, fmt: str, special_types: bool = True) -> str:
    return print_problem(translate(problem, fmt, special_types))
