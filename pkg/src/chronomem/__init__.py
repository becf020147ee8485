"""Temporal concept-graph long-term memory for chat systems.

Knowledge arrives as natural-language statements; each ingestion extracts
stemmed noun concepts, links adjacent ones, and merges them into a persistent
graph whose nodes and edges remember when they were last touched. Questions
traverse the graph under a temporal window, pack the best-scoring concept
contexts behind a chronological preamble, and hand the prompt to a chat
provider. A vector-similarity baseline, a hybrid router, and a benchmark
harness ship alongside.
"""

from .extract import ConceptBatch, extract_concepts, split_sentences, stem, tag_nouns
from .graph import (
    ConceptNode,
    GraphStore,
    MergeReport,
    Relation,
    load,
    merge_batch,
    neighbors,
    snapshot,
)
from .hybrid import HybridTrace, discriminate, hybrid_answer, perfect_discriminator_accuracy
from .providers import ChatRequest, ProviderError, RemoteProvider, ScriptedProvider
from .recall import (
    CHRONOLOGICAL_PREFIX,
    RetrievalConfig,
    RetrievalTrace,
    answer,
    assemble_prompt,
    build_prompt_set,
    essential_labels,
)
from .update import (
    FallbackReviser,
    ProviderReviser,
    RevisionPolicy,
    UpdateReport,
    knowledge_update,
    revise_context,
)
from .vecstore import HashedNgramEmbedder, VectorStore, VectorTrace, answer_vec, segment

__version__ = "0.1.0"
