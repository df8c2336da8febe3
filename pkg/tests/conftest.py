from pathlib import Path

import pytest

from ontomerge.cli import run_pipeline
from ontomerge.ontology import parse_ontology

REPO_ROOT = Path(__file__).resolve().parents[1]
RUNNING_EXAMPLE_DIR = REPO_ROOT / "data" / "running_example"


@pytest.fixture(scope="session")
def running_example_dir() -> Path:
    return RUNNING_EXAMPLE_DIR


@pytest.fixture(scope="session")
def running_sources():
    """The four conflicting sources about papers, texts, documents, books."""
    return [
        parse_ontology((RUNNING_EXAMPLE_DIR / f"source{i}.txt").read_text(encoding="utf-8"))
        for i in (1, 2, 3, 4)
    ]


@pytest.fixture(scope="session")
def pipeline(running_sources):
    """The full pipeline run once on the running example."""
    return run_pipeline(running_sources)
