from __future__ import annotations

from importlib import resources

import pytest

from orbifano.formats import json_format
from orbifano.io.registry import default_registry
from orbifano.schemas.registry import Registry


@pytest.fixture(scope="session")
def registry() -> Registry:
    return default_registry()


@pytest.fixture
def registry_dict() -> dict:
    """A mutable copy of the embedded registry, as the JSON document reads."""
    text = resources.files("orbifano.data").joinpath("registry.json").read_text("utf-8")
    return json_format.loads(text)


@pytest.fixture
def weights_file(tmp_path):
    path = tmp_path / "x1_10_3.txt"
    path.write_text(
        "# X_{1,10/3} in a rank two toric variety\n"
        "2 6\n"
        "1 1 2 1 0 0\n"
        "0 0 1 2 1 1\n"
        "|\n"
        "2 2\n"
        "2 2\n",
        encoding="utf-8",
    )
    return path
