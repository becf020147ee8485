"""Question answering over the concept graph.

Concept labels extracted from the question seed a bounded graph traversal;
candidates are ranked by relation strength plus a recency bonus, packed into
a prompt behind a fixed chronological preamble, and handed to a chat
provider. Retrieval-only mode stops before the provider call, which is what
the benchmark uses for its deterministic evidence metric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .extract import RuleTagger, default_tagger, split_sentences, stem, tag_nouns
from .graph import GraphStore, Relation, neighbors
from .providers import ChatProvider, ChatRequest

__all__ = [
    "CHRONOLOGICAL_PREFIX",
    "RetrievalConfig",
    "PromptEntry",
    "RetrievalTrace",
    "essential_labels",
    "build_prompt_set",
    "assemble_prompt",
    "answer",
]

CHRONOLOGICAL_PREFIX = (
    "each sentence in the following statements is true when read in "
    "chronological order"
)


@dataclass
class RetrievalConfig:
    max_prompt_concepts: int = 10
    max_distance: int = 2
    alpha: float = 3.0
    temporal_window: int | None = 3  # None = unlimited


@dataclass
class PromptEntry:
    label: str
    score: float | None = None  # None for essentials, which are unscored
    relation: tuple[str, str, int, int] | None = None  # (a, b, strength, t)


@dataclass
class RetrievalTrace:
    question: str
    essentials_requested: list[str] = field(default_factory=list)
    essentials_found: list[str] = field(default_factory=list)
    prompt_set: list[PromptEntry] = field(default_factory=list)
    assembled_context: str = ""
    answer: str | None = None
    error: str | None = None


def essential_labels(question: str, tagger: RuleTagger | None = None) -> list[str]:
    """Stemmed noun labels from the question, first occurrence order, deduped."""
    tagger = tagger or default_tagger()
    seen: set[str] = set()
    out: list[str] = []
    for sentence in split_sentences(question):
        for token, _ in tag_nouns(sentence, tagger):
            label = stem(token)
            if label and label not in seen:
                seen.add(label)
                out.append(label)
    return out


def build_prompt_set(
    store: GraphStore,
    essentials: list[str],
    cfg: RetrievalConfig | None = None,
) -> list[PromptEntry]:
    """Assemble the ordered concept list used for prompting.

    Essentials that exist in the store come first, in question order; the
    remaining slots are filled with their traversal neighborhood sorted by
    strength + alpha * T(relation) descending (ties: higher relation T, then
    label), truncated to ``max_prompt_concepts``.
    """
    cfg = cfg or RetrievalConfig()
    found = [e for e in essentials if e in store.nodes]
    prompt: list[PromptEntry] = [PromptEntry(label=e) for e in found]
    in_prompt = set(found)

    candidates: dict[str, Relation] = {}
    for essential in found:
        for node, relation in neighbors(
            store,
            essential,
            max_distance=cfg.max_distance,
            window=cfg.temporal_window,
            alpha=cfg.alpha,
        ):
            if node.label in in_prompt:
                continue
            held = candidates.get(node.label)
            if held is None or _better(relation, held, cfg.alpha):
                candidates[node.label] = relation

    def sort_key(item: tuple[str, Relation]):
        label, relation = item
        score = relation.strength + cfg.alpha * relation.temporal_index
        return (-score, -relation.temporal_index, label)

    for label, relation in sorted(candidates.items(), key=sort_key):
        prompt.append(
            PromptEntry(
                label=label,
                score=relation.strength + cfg.alpha * relation.temporal_index,
                relation=(relation.a, relation.b, relation.strength,
                          relation.temporal_index),
            )
        )
    return prompt[: cfg.max_prompt_concepts]


def _better(new: Relation, held: Relation, alpha: float) -> bool:
    new_score = new.strength + alpha * new.temporal_index
    held_score = held.strength + alpha * held.temporal_index
    if new_score != held_score:
        return new_score > held_score
    return new.temporal_index > held.temporal_index


def assemble_prompt(
    store: GraphStore, prompt_set: list[PromptEntry], question: str
) -> str:
    """Chronological preamble, then each concept's context in order, then the question."""
    parts = [CHRONOLOGICAL_PREFIX]
    for entry in prompt_set:
        node = store.nodes.get(entry.label)
        if node is not None and node.context:
            parts.append(node.context)
    parts.append(question)
    return " ".join(parts)


def answer(
    store: GraphStore,
    question: str,
    provider: ChatProvider | None = None,
    cfg: RetrievalConfig | None = None,
    tagger: RuleTagger | None = None,
) -> RetrievalTrace:
    """Full pipeline: essentials, prompt set, assembly, then the provider.

    With ``provider=None`` (retrieval-only) the trace carries everything but
    the answer. Provider failures land in ``trace.error`` with the retrieval
    artifacts preserved.
    """
    cfg = cfg or RetrievalConfig()
    trace = RetrievalTrace(question=question)
    trace.essentials_requested = essential_labels(question, tagger)
    trace.essentials_found = [
        e for e in trace.essentials_requested if e in store.nodes
    ]
    trace.prompt_set = build_prompt_set(store, trace.essentials_requested, cfg)
    trace.assembled_context = assemble_prompt(store, trace.prompt_set, question)
    if provider is None:
        return trace
    request = ChatRequest(messages=[("user", trace.assembled_context)])
    try:
        trace.answer = provider.complete(request)
    except Exception as exc:
        trace.error = str(exc)
    return trace
