"""Hybrid routing between the concept graph and the vector baseline.

Both backends answer every question; a discriminator picks the response that
looks more certain and concise. The discriminator is either a chat provider
driven by a bundled 6-shot prompt, or a deterministic phrase-count heuristic
that needs no model at all. A perfect-discriminator upper bound over graded
results quantifies how much a better discriminator could recover.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .graph import GraphStore
from .providers import ChatProvider, ChatRequest
from .recall import RetrievalConfig, RetrievalTrace, answer
from .vecstore import VectorStore, VectorTrace, answer_vec

__all__ = [
    "UNCERTAINTY_PHRASES",
    "HybridTrace",
    "discriminate",
    "heuristic_choice",
    "hybrid_answer",
    "perfect_discriminator_accuracy",
]

# Case-insensitive markers of a backend admitting it does not know.
UNCERTAINTY_PHRASES = (
    "not having enough information",
    "conflicting information",
    "cannot",
    "don't know",
    "no information",
)


@dataclass
class HybridTrace:
    question: str
    graph_trace: RetrievalTrace
    vector_trace: VectorTrace
    chosen: str = "graph"  # "graph" | "vector"
    basis: str = "heuristic"  # "discriminator" | "heuristic" | "fallback" | "retrieval-only"

    @property
    def answer(self) -> str | None:
        picked = self.graph_trace if self.chosen == "graph" else self.vector_trace
        return picked.answer


def _uncertainty_score(text: str) -> int:
    lowered = text.lower()
    return sum(1 for phrase in UNCERTAINTY_PHRASES if phrase in lowered)


def heuristic_choice(answer_a: str, answer_b: str) -> str:
    """'A' or 'B': fewer uncertainty-phrase hits wins, ties go to A."""
    return "B" if _uncertainty_score(answer_b) < _uncertainty_score(answer_a) else "A"


def _discriminator_prompt(question: str, answer_a: str, answer_b: str) -> str:
    template = (
        resources.files("chronomem").joinpath("prompts/discriminator.txt")
        .read_text(encoding="utf-8")
    )
    return template.format(question=question, answer_a=answer_a, answer_b=answer_b)


def discriminate(
    question: str,
    answer_a: str,
    answer_b: str,
    provider: ChatProvider | None = None,
) -> tuple[str, str]:
    """Choose between two answers; returns (choice, basis).

    With a provider, the 6-shot prompt is used and the reply parsed to A/B;
    anything unparseable falls back to the heuristic (and says so in the
    basis). Without a provider the heuristic runs directly.
    """
    if provider is not None:
        request = ChatRequest(
            messages=[("user", _discriminator_prompt(question, answer_a, answer_b))]
        )
        try:
            reply = provider.complete(request)
        except Exception:
            reply = ""
        match = re.search(r"\b([AB])\b", reply.upper())
        if match:
            return match.group(1), "discriminator"
        return heuristic_choice(answer_a, answer_b), "heuristic"
    return heuristic_choice(answer_a, answer_b), "heuristic"


def hybrid_answer(
    graph_store: GraphStore,
    vector_store: VectorStore,
    question: str,
    provider: ChatProvider | None = None,
    cfg: RetrievalConfig | None = None,
    k: int = 5,
    discriminator: ChatProvider | None = None,
) -> HybridTrace:
    """Answer with both backends and keep the discriminator's pick.

    ``provider`` generates both answers; ``discriminator`` (often the same
    provider) picks between them. If one backend fails the other's answer is
    kept with basis "fallback"; if both fail the trace carries no answer.
    """
    try:
        graph_trace = answer(graph_store, question, provider, cfg)
    except Exception as exc:
        graph_trace = RetrievalTrace(question=question, error=str(exc))
    try:
        vector_trace = answer_vec(vector_store, question, provider, k=k)
    except Exception as exc:
        vector_trace = VectorTrace(question=question, error=str(exc))
    trace = HybridTrace(
        question=question, graph_trace=graph_trace, vector_trace=vector_trace
    )
    if provider is None:
        trace.chosen, trace.basis = "graph", "retrieval-only"
        return trace
    if graph_trace.answer is None and vector_trace.answer is None:
        trace.chosen, trace.basis = "graph", "fallback"
        return trace
    if graph_trace.answer is None:
        trace.chosen, trace.basis = "vector", "fallback"
        return trace
    if vector_trace.answer is None:
        trace.chosen, trace.basis = "graph", "fallback"
        return trace
    choice, basis = discriminate(
        question, graph_trace.answer, vector_trace.answer, discriminator
    )
    trace.chosen = "graph" if choice == "A" else "vector"
    trace.basis = basis
    return trace


def perfect_discriminator_accuracy(
    grades_graph: Sequence[int],
    grades_vec: Sequence[int],
    scale_max: int = 2,
) -> float:
    """Upper-bound accuracy if every per-question choice were optimal.

    Takes the per-question maximum of the two grade lists and divides by the
    maximum possible total. Returns a fraction in [0, 1].
    """
    if len(grades_graph) != len(grades_vec):
        raise ValueError(
            f"grade tables differ in length: {len(grades_graph)} vs {len(grades_vec)}"
        )
    if not grades_graph:
        raise ValueError("grade tables are empty")
    total = sum(max(g, v) for g, v in zip(grades_graph, grades_vec))
    return total / (scale_max * len(grades_graph))
