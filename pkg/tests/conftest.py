import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from chronomem import GraphStore, VectorStore, knowledge_update
from chronomem.bench import TemporalDataset, load_dataset


@pytest.fixture(scope="session")
def dataset() -> TemporalDataset:
    return load_dataset()


@pytest.fixture(scope="session")
def one_pass_store(dataset) -> GraphStore:
    """Graph store after the initial block plus one full loop repetition."""
    store = GraphStore()
    for statement in dataset.initial + dataset.loop:
        knowledge_update(store, statement)
    return store


@pytest.fixture(scope="session")
def one_pass_vectors(dataset) -> VectorStore:
    store = VectorStore()
    for statement in dataset.initial + dataset.loop:
        store.add(statement)
    return store
