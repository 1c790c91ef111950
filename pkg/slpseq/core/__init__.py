"""Library layer of slpseq: SLP model, seaweed algebra, semilocal matrices, recognition, oracles."""

from .formatters import Formatter, format_output
from .recognition import Recognizer, WindowReport
from .slp import Concat, Slp, Terminal, expand, parse_slp, serialize_slp

__all__ = [
    "Concat",
    "Formatter",
    "Recognizer",
    "Slp",
    "Terminal",
    "WindowReport",
    "expand",
    "format_output",
    "parse_slp",
    "serialize_slp",
]
