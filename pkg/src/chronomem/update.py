"""The knowledge-update pipeline: counter bump, merge, and context revision.

One call to :func:`knowledge_update` is one timestep. Oversized concept
contexts are periodically compacted by a reviser, by default a deterministic
keep-last-sentences rule so everything runs offline; pass a chat provider to
summarize with a model instead. A failing reviser never loses memory: the
merge always commits and the failure is recorded on the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .extract import RuleTagger, extract_concepts, split_sentences
from .graph import GraphStore, MergeReport, merge_batch
from .providers import ChatProvider, ChatRequest

__all__ = [
    "RevisionPolicy",
    "UpdateReport",
    "Reviser",
    "FallbackReviser",
    "ProviderReviser",
    "knowledge_update",
    "revise_context",
]


@dataclass
class RevisionPolicy:
    merges_per_revision: int = 5
    max_context_chars: int = 2000
    enabled: bool = False

    def due(self, merge_count: int, revisions_done: int, context: str) -> bool:
        if not self.enabled:
            return False
        overdue = (
            merge_count - revisions_done * self.merges_per_revision
            >= self.merges_per_revision
        )
        return overdue or len(context) > self.max_context_chars


@dataclass
class UpdateReport:
    t_after: int
    merge: MergeReport
    revised: list[str] = field(default_factory=list)
    revision_failures: list[tuple[str, str]] = field(default_factory=list)


class Reviser:
    """Rewrites one concept's context, keeping the still-true recent facts."""

    def revise(self, context: str) -> str:
        raise NotImplementedError


class FallbackReviser(Reviser):
    """Offline reviser: keep the last ``keep_sentences`` sentences, in order."""

    def __init__(self, keep_sentences: int = 10):
        self.keep_sentences = keep_sentences

    def revise(self, context: str) -> str:
        sentences = split_sentences(context)
        if len(sentences) <= self.keep_sentences:
            return context
        return " ".join(s.text for s in sentences[-self.keep_sentences:])


def _revision_prompt(context: str) -> str:
    template = (
        resources.files("chronomem").joinpath("prompts/revision.txt")
        .read_text(encoding="utf-8")
    )
    return template.format(context=context)


class ProviderReviser(Reviser):
    """Summarizes via a chat provider using the bundled one-shot template."""

    def __init__(self, provider: ChatProvider):
        self.provider = provider

    def revise(self, context: str) -> str:
        request = ChatRequest(messages=[("user", _revision_prompt(context))])
        return self.provider.complete(request).strip()


def revise_context(node, reviser: Reviser) -> str:
    """Produce a revised context for a node; provider errors propagate."""
    if not node.context:
        raise ValueError(f"concept {node.label!r} has no context to revise")
    return reviser.revise(node.context)


def knowledge_update(
    store: GraphStore,
    text: str,
    policy: RevisionPolicy | None = None,
    reviser: Reviser | None = None,
    tagger: RuleTagger | None = None,
) -> UpdateReport:
    """Ingest one text: bump the counter, merge concepts, revise if due."""
    if not text:
        raise ValueError("knowledge update requires non-empty text")
    policy = policy or RevisionPolicy()
    store.global_counter += 1
    batch = extract_concepts(text, tagger)
    merge = merge_batch(store, batch)
    report = UpdateReport(t_after=store.global_counter, merge=merge)
    if policy.enabled:
        reviser = reviser or FallbackReviser()
        for label in sorted(batch.concepts):
            node = store.nodes[label]
            if not policy.due(node.merge_count, node.revisions_done, node.context):
                continue
            try:
                revised = revise_context(node, reviser)
            except Exception as exc:  # a flaky reviser must not lose memory
                report.revision_failures.append((label, str(exc)))
                continue
            node.context = revised
            node.revisions_done += 1
            report.revised.append(label)
    return report
