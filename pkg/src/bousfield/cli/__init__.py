from .evaluate import EvalError, evaluate, run
from .format import format_value
from .main import main
from .parser import ParseError, parse

__all__ = ["EvalError", "ParseError", "evaluate", "format_value", "main", "parse", "run"]
