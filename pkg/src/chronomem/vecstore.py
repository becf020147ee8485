"""Vector-similarity baseline memory.

Source text is packed into overlapping chunks, embedded, and retrieved by
exact cosine scan (corpora here are small; no approximate index). The default
embedder feature-hashes character trigrams, so the whole baseline runs
offline and deterministically; a remote embedding endpoint can be plugged in
through the provider layer. Unlike the graph path, answers get no
chronological preamble: this baseline has no notion of time, which is exactly
the behavior the benchmark documents.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from .extract import split_sentences
from .providers import ChatProvider, ChatRequest, RemoteProvider

__all__ = [
    "Chunk",
    "HashedNgramEmbedder",
    "RemoteEmbedder",
    "VectorStore",
    "VectorTrace",
    "segment",
    "answer_vec",
    "VectorSnapshotError",
]

MAX_CHUNK_CHARS = 400
SNAPSHOT_VERSION = 1


class VectorSnapshotError(ValueError):
    pass


@dataclass
class Chunk:
    text: str
    ordinal: int
    vector: np.ndarray


def segment(text: str) -> list[str]:
    """Greedy sentence packing into <=400-char chunks with 1-sentence overlap."""
    sentences = [s.text for s in split_sentences(text)]
    if not sentences:
        return []
    chunks: list[str] = []
    start = 0
    while start < len(sentences):
        end = start
        length = 0
        while end < len(sentences):
            extra = len(sentences[end]) + (1 if end > start else 0)
            if length + extra > MAX_CHUNK_CHARS and end > start:
                break
            length += extra
            end += 1
        chunks.append(" ".join(sentences[start:end]))
        if end >= len(sentences):
            break
        start = max(end - 1, start + 1)  # 1-sentence overlap, always advancing
    return chunks


def _bucket(gram: str, dimension: int) -> int:
    digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % dimension


class HashedNgramEmbedder:
    """Offline embedder: character trigram counts feature-hashed into buckets."""

    def __init__(self, dimension: int = 256):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self.dimension = dimension

    def embed(self, text: str) -> np.ndarray:
        lowered = text.lower()
        vector = np.zeros(self.dimension, dtype=np.float64)
        for i in range(len(lowered) - 2):
            vector[_bucket(lowered[i:i + 3], self.dimension)] += 1.0
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise ValueError(f"text {text!r:.50} produced a zero embedding")
        return vector / norm


class RemoteEmbedder:
    """Provider-backed embedder; validates dimension and normalizes."""

    def __init__(self, provider: RemoteProvider, dimension: int):
        self.provider = provider
        self.dimension = dimension

    def embed(self, text: str) -> np.ndarray:
        raw = self.provider.embed(text)
        if len(raw) != self.dimension:
            raise ValueError(
                f"embedding dimension {len(raw)} does not match configured "
                f"{self.dimension}"
            )
        vector = np.asarray(raw, dtype=np.float64)
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise ValueError("remote endpoint returned a zero embedding")
        return vector / norm


class VectorStore:
    """Exact-scan vector memory with deterministic tie-breaking."""

    def __init__(self, embedder=None):
        self.embedder = embedder or HashedNgramEmbedder()
        self.chunks: list[Chunk] = []

    def add(self, text: str) -> list[Chunk]:
        """Segment and store one text; returns the chunks created."""
        created = []
        for piece in segment(text):
            chunk = Chunk(
                text=piece, ordinal=len(self.chunks), vector=self.embedder.embed(piece)
            )
            self.chunks.append(chunk)
            created.append(chunk)
        return created

    def query(self, question: str, k: int = 5) -> list[tuple[Chunk, float]]:
        """Top-k chunks by cosine similarity, descending; ties to lower ordinal."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if not self.chunks:
            return []
        probe = self.embedder.embed(question)
        matrix = np.stack([c.vector for c in self.chunks])
        scores = matrix @ probe
        order = sorted(range(len(self.chunks)), key=lambda i: (-scores[i], i))
        return [(self.chunks[i], float(scores[i])) for i in order[:k]]

    def snapshot(self) -> bytes:
        doc = {
            "version": SNAPSHOT_VERSION,
            "chunks": [
                {"ordinal": c.ordinal, "text": c.text, "vector": c.vector.tolist()}
                for c in self.chunks
            ],
        }
        return json.dumps(doc, sort_keys=True, ensure_ascii=False).encode("utf-8")

    @classmethod
    def load(cls, stream: bytes, embedder=None) -> "VectorStore":
        try:
            doc = json.loads(stream.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise VectorSnapshotError(f"malformed vector snapshot: {exc}") from exc
        if doc.get("version") != SNAPSHOT_VERSION:
            raise VectorSnapshotError(
                f"unsupported vector snapshot version {doc.get('version')!r}"
            )
        store = cls(embedder=embedder)
        for entry in sorted(doc.get("chunks", []), key=lambda e: e["ordinal"]):
            store.chunks.append(
                Chunk(
                    text=entry["text"],
                    ordinal=int(entry["ordinal"]),
                    vector=np.asarray(entry["vector"], dtype=np.float64),
                )
            )
        return store


@dataclass
class VectorTrace:
    question: str
    contexts: list[str] = field(default_factory=list)
    scores: list[float] = field(default_factory=list)
    prompt: str = ""
    answer: str | None = None
    error: str | None = None


def answer_vec(
    store: VectorStore,
    question: str,
    provider: ChatProvider | None = None,
    k: int = 5,
) -> VectorTrace:
    """Similarity-search retrieval and answer; no chronological preamble."""
    trace = VectorTrace(question=question)
    for chunk, score in store.query(question, k=k):
        trace.contexts.append(chunk.text)
        trace.scores.append(score)
    trace.prompt = " ".join(trace.contexts + [question])
    if provider is None:
        return trace
    request = ChatRequest(messages=[("user", trace.prompt)])
    try:
        trace.answer = provider.complete(request)
    except Exception as exc:
        trace.error = str(exc)
    return trace
