"""Concrete syntax: lexer, parsers, printers, and the script language."""

from .lexer import Cursor, Token, tokenize  # noqa: F401
from .parsers import FolEnv, parse_expr, parse_expr_at  # noqa: F401
from .printer import pretty, pretty_hol, pretty_stlc  # noqa: F401
from .script import ScriptCommand, parse_script  # noqa: F401
