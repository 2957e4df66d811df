"""
Built-in presentations shipped with the package.

Each built-in is a `.shift` file under `presentations/`, loaded through
importlib.resources so it resolves the same way from a checkout or an install.
"""

import logging
from importlib import resources

from src.domain.exceptions import PreconditionError
from src.domain.graph import LabeledGraph
from src.infrastructure.presentation_file import parse_presentation

logger = logging.getLogger(__name__)

PRESENTATIONS_PACKAGE = "src.infrastructure"
PRESENTATIONS_DIR = "presentations"
SUFFIX = ".shift"


def builtin_names() -> list[str]:
    """Names of the built-in presentations, sorted."""
    directory = resources.files(PRESENTATIONS_PACKAGE) / PRESENTATIONS_DIR
    return sorted(
        entry.name.removesuffix(SUFFIX) for entry in directory.iterdir() if entry.name.endswith(SUFFIX)
    )


def builtin_text(name: str) -> str:
    """
    Raw file content of a built-in presentation.

    Raises:
        PreconditionError: If no built-in has this name
    """
    if name not in builtin_names():
        raise PreconditionError(f"unknown built-in '{name}' (known: {', '.join(builtin_names())})")
    resource = resources.files(PRESENTATIONS_PACKAGE) / PRESENTATIONS_DIR / f"{name}{SUFFIX}"
    return resource.read_text(encoding="utf-8")


def load_builtin(name: str) -> LabeledGraph:
    """Parse a built-in presentation by name."""
    logger.debug(f"Loading built-in presentation '{name}'")
    return parse_presentation(builtin_text(name))
