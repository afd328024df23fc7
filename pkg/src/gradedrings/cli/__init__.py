"""Command-line front end: session language, commands and JSON reports."""
from .commands import COMMANDS, CommandError, Report, run_command
from .main import main
from .parser import (
    SessionDeclaration,
    SessionError,
    format_session,
    parse_expression,
    parse_session,
    tokenize,
)

__all__ = [
    "COMMANDS",
    "CommandError",
    "Report",
    "SessionDeclaration",
    "SessionError",
    "format_session",
    "main",
    "parse_expression",
    "parse_session",
    "run_command",
    "tokenize",
]
