"""
Pytest configuration and shared fixtures.

Built-in presentations are loaded through the catalog so tests exercise the
same files the CLI ships with.
"""

import os

import pytest

from src.domain.graph import LabeledGraph
from src.domain.language import GraphLanguage
from src.domain.updown import UpDownLanguage
from src.domain.words import Alphabet
from src.infrastructure.catalog import load_builtin

# Settings are read when src.main / the CLI are first imported, after this file
os.environ.setdefault("LOG_LEVEL", "ERROR")


@pytest.fixture
def golden_mean() -> LabeledGraph:
    return load_builtin("golden-mean")


@pytest.fixture
def even_shift() -> LabeledGraph:
    return load_builtin("even")


@pytest.fixture
def full_shift() -> LabeledGraph:
    return load_builtin("full2")


@pytest.fixture
def period_two() -> LabeledGraph:
    return load_builtin("period2")


@pytest.fixture
def binary() -> Alphabet:
    return Alphabet(["0", "1"])


@pytest.fixture
def golden_mean_language(golden_mean: LabeledGraph) -> GraphLanguage:
    return GraphLanguage(golden_mean, "golden-mean")


@pytest.fixture
def even_language(even_shift: LabeledGraph) -> GraphLanguage:
    return GraphLanguage(even_shift, "even")


@pytest.fixture
def full_language(full_shift: LabeledGraph) -> GraphLanguage:
    return GraphLanguage(full_shift, "full2")


@pytest.fixture
def updown_language() -> UpDownLanguage:
    return UpDownLanguage()
