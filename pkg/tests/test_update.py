"""Knowledge-update pipeline: counter discipline and context revision."""

import pytest

from chronomem.extract import extract_concepts
from chronomem.graph import GraphStore
from chronomem.providers import ScriptedProvider
from chronomem.update import (
    FallbackReviser,
    ProviderReviser,
    RevisionPolicy,
    knowledge_update,
    revise_context,
)


class FailingReviser:
    def revise(self, context):
        raise RuntimeError("reviser exploded")


class TestCounter:
    def test_increments_once_per_update(self):
        store = GraphStore()
        for n in range(1, 6):
            report = knowledge_update(store, f"Brandon ate snack number {n}.")
            assert report.t_after == n
        assert store.global_counter == 5

    def test_noun_free_text_still_counts(self):
        store = GraphStore()
        report = knowledge_update(store, "it is not here")
        assert store.global_counter == 1
        assert report.merge.nodes_created == 0

    def test_empty_text_rejected(self):
        with pytest.raises(ValueError):
            knowledge_update(GraphStore(), "")

    def test_initial_block_reaches_ten(self, dataset):
        store = GraphStore()
        for statement in dataset.initial:
            knowledge_update(store, statement)
        assert store.global_counter == 10


class TestRevisionPolicy:
    def test_disabled_never_due(self):
        policy = RevisionPolicy(enabled=False)
        assert not policy.due(100, 0, "x" * 100000)

    def test_merge_count_trigger(self):
        policy = RevisionPolicy(merges_per_revision=5, enabled=True)
        assert not policy.due(4, 0, "short")
        assert policy.due(5, 0, "short")
        # after one revision the next window starts
        assert not policy.due(9, 1, "short")
        assert policy.due(10, 1, "short")

    def test_char_cap_trigger(self):
        policy = RevisionPolicy(max_context_chars=10, enabled=True)
        assert policy.due(1, 0, "x" * 11)
        assert not policy.due(1, 0, "x" * 10)


class TestReviseContext:
    def test_fallback_keeps_last_k_sentences(self):
        sentences = [f"Fact number {i} is here." for i in range(12)]
        context = " ".join(sentences)
        node = type("N", (), {"label": "x", "context": context})()
        revised = revise_context(node, FallbackReviser(keep_sentences=10))
        assert revised == " ".join(sentences[2:])

    def test_fallback_short_context_unchanged(self):
        node = type("N", (), {"label": "x", "context": "Only one sentence."})()
        assert revise_context(node, FallbackReviser()) == "Only one sentence."

    def test_scripted_provider_revision(self):
        provider = ScriptedProvider(script=[("X is red", "X is blue.")])
        node = type("N", (), {"label": "x", "context": "X is red. X is blue."})()
        assert revise_context(node, ProviderReviser(provider)) == "X is blue."

    def test_empty_context_rejected(self):
        node = type("N", (), {"label": "x", "context": ""})()
        with pytest.raises(ValueError):
            revise_context(node, FallbackReviser())


class TestKnowledgeUpdateRevision:
    def test_revision_applies_when_due(self):
        store = GraphStore()
        policy = RevisionPolicy(merges_per_revision=3, enabled=True)
        reviser = FallbackReviser(keep_sentences=1)
        reports = [
            knowledge_update(store, f"Brandon ate meal {i}.", policy, reviser)
            for i in range(1, 4)
        ]
        assert reports[-1].revised == ["brandon"]
        node = store.nodes["brandon"]
        assert node.revisions_done == 1
        assert node.context == "Brandon ate meal 3."

    def test_failed_revision_preserves_context_and_commits(self):
        store = GraphStore()
        policy = RevisionPolicy(merges_per_revision=2, enabled=True)
        before_counter = store.global_counter
        knowledge_update(store, "Brandon ate rice.", policy, FailingReviser())
        report = knowledge_update(store, "Brandon ate peas.", policy, FailingReviser())
        assert store.global_counter == before_counter + 2
        assert report.revised == []
        assert report.revision_failures == [("brandon", "reviser exploded")]
        assert store.nodes["brandon"].context == "Brandon ate rice. Brandon ate peas."
        assert store.nodes["brandon"].revisions_done == 0

    def test_disabled_contexts_are_exact_concatenations(self, dataset):
        store = GraphStore()
        statements = dataset.initial + dataset.loop[:20]
        for statement in statements:
            knowledge_update(store, statement)
        expected = {}
        for statement in statements:
            for label, entry in extract_concepts(statement).concepts.items():
                expected[label] = (
                    entry.context if label not in expected
                    else expected[label] + " " + entry.context
                )
        for label, context in expected.items():
            assert store.nodes[label].context == context
