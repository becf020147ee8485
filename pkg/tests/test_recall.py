"""Retrieval: essentials, prompt-set ranking, assembly, and answering."""

import random

from hypothesis import given, strategies as st

from chronomem.graph import ConceptNode, GraphStore, Relation
from chronomem.providers import ScriptedProvider
from chronomem.recall import (
    CHRONOLOGICAL_PREFIX,
    RetrievalConfig,
    answer,
    assemble_prompt,
    build_prompt_set,
    essential_labels,
)
from chronomem.extract import stem


class TestEssentialLabels:
    def test_question_order_dedup(self):
        got = essential_labels("Did Brandon tell Brandon about Cisco?")
        assert got == [stem("Brandon"), stem("Cisco")]

    def test_no_nouns(self):
        assert essential_labels("Is it?") == []

    def test_possessive_question(self):
        got = essential_labels("What is Brandon's favorite color?")
        assert stem("Brandon") in got
        assert stem("color") in got

    def test_work_reads_as_verb(self):
        assert essential_labels("Where does Brandon work?") == [stem("Brandon")]


def store_with(nodes, edges, counter=10):
    store = GraphStore(global_counter=counter)
    for label, t in nodes:
        store.nodes[label] = ConceptNode(label, f"ctx-{label}.", t)
    for a, b, strength, t in edges:
        pair = (a, b) if a <= b else (b, a)
        store.edges[pair] = Relation(pair[0], pair[1], strength, t)
    return store


class TestBuildPromptSet:
    def test_score_formula(self):
        store = store_with(
            [("q", 10), ("n", 10)], [("q", "n", 4, 7)]
        )
        entries = build_prompt_set(store, ["q"], RetrievalConfig(alpha=3))
        scored = [e for e in entries if e.label == "n"]
        assert scored[0].score == 4 + 3 * 7

    def test_essentials_first_and_capacity(self):
        nodes = [("e1", 10), ("e2", 10)] + [(f"n{i}", 10) for i in range(12)]
        edges = [("e1", f"n{i}", 1, 5) for i in range(6)]
        edges += [("e2", f"n{i}", 1, 5) for i in range(6, 12)]
        store = store_with(nodes, edges)
        cfg = RetrievalConfig(temporal_window=None)
        entries = build_prompt_set(store, ["e1", "e2"], cfg)
        assert len(entries) == 10
        assert [e.label for e in entries[:2]] == ["e1", "e2"]

    def test_tie_break_by_label(self):
        store = store_with(
            [("q", 10), ("apple", 10), ("banana", 10)],
            [("q", "apple", 2, 5), ("q", "banana", 2, 5)],
        )
        entries = build_prompt_set(store, ["q"], RetrievalConfig(temporal_window=None))
        assert [e.label for e in entries] == ["q", "apple", "banana"]

    def test_tie_break_prefers_newer_relation(self):
        store = store_with(
            [("q", 10), ("a", 10), ("b", 10)],
            # equal scores: 4 + 3*5 = 19 and 1 + 3*6 = 19
            [("q", "a", 4, 5), ("q", "b", 1, 6)],
        )
        cfg = RetrievalConfig(alpha=3, temporal_window=None)
        entries = build_prompt_set(store, ["q"], cfg)
        assert [e.label for e in entries] == ["q", "b", "a"]

    def test_missing_essentials_dropped(self):
        store = store_with([("known", 10)], [])
        entries = build_prompt_set(store, ["ghost", "known"])
        assert [e.label for e in entries] == ["known"]

    def test_empty_store(self):
        assert build_prompt_set(GraphStore(), ["x"]) == []

    def test_argmax_stable_under_joint_scaling(self):
        rng = random.Random(5)
        nodes = [("q", 10)] + [(f"n{i}", 10) for i in range(8)]
        edges = [
            ("q", f"n{i}", rng.randint(1, 9), rng.randint(1, 9)) for i in range(8)
        ]
        base = store_with(nodes, edges)
        order_base = [
            e.label for e in build_prompt_set(base, ["q"], RetrievalConfig(alpha=3))
        ]
        scaled = store_with(
            nodes, [(a, b, s * 7, t) for a, b, s, t in edges]
        )
        order_scaled = [
            e.label
            for e in build_prompt_set(scaled, ["q"], RetrievalConfig(alpha=21))
        ]
        assert order_base == order_scaled


class TestAssemblePrompt:
    def test_empty_prompt_set(self):
        got = assemble_prompt(GraphStore(), [], "Where is it?")
        assert got == f"{CHRONOLOGICAL_PREFIX} Where is it?"

    def test_contexts_in_order(self):
        store = store_with([("a", 1), ("b", 1)], [])
        store.nodes["a"].context = "A context."
        store.nodes["b"].context = "B context."
        entries = build_prompt_set(store, ["a", "b"])
        got = assemble_prompt(store, entries, "q?")
        assert got == f"{CHRONOLOGICAL_PREFIX} A context. B context. q?"

    def test_prefix_is_exact(self):
        assert CHRONOLOGICAL_PREFIX == (
            "each sentence in the following statements is true when read in "
            "chronological order"
        )


class TestAnswer:
    def test_retrieval_only(self, one_pass_store):
        trace = answer(one_pass_store, "What is Brandon's favorite color?")
        assert trace.answer is None
        assert trace.prompt_set
        assert trace.assembled_context.startswith(CHRONOLOGICAL_PREFIX)

    def test_scripted_provider(self, one_pass_store):
        provider = ScriptedProvider(script=[("color", "Green.")])
        trace = answer(one_pass_store, "What is Brandon's favorite color?", provider)
        assert trace.answer == "Green."

    def test_empty_store_prompt_is_prefix_plus_question(self):
        trace = answer(GraphStore(), "Where does Brandon work?")
        assert trace.essentials_found == []
        assert trace.assembled_context == (
            f"{CHRONOLOGICAL_PREFIX} Where does Brandon work?"
        )

    def test_provider_error_recorded(self, one_pass_store):
        class Boom:
            def complete(self, request):
                raise RuntimeError("nope")

        trace = answer(one_pass_store, "What is Brandon's favorite color?", Boom())
        assert trace.answer is None
        assert "nope" in trace.error
        assert trace.prompt_set  # retrieval artifacts preserved


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=12))
def test_capacity_property(extra, cap):
    store = store_with(
        [("q", 10)] + [(f"n{i}", 10) for i in range(extra)],
        [("q", f"n{i}", 1, 5) for i in range(extra)],
    )
    entries = build_prompt_set(store, ["q"], RetrievalConfig(max_prompt_concepts=cap))
    assert len(entries) <= cap


def test_chronology_within_concept_contribution(one_pass_store, dataset):
    trace = answer(one_pass_store, "What is Brandon's favorite color?")
    context = trace.assembled_context
    brandon = one_pass_store.nodes["brandon"].context
    assert brandon in context
    # within the node context, sentence order equals ingestion order
    positions = [
        brandon.find(s) for s in dataset.loop if "favorite color" in s
    ]
    assert all(p >= 0 for p in positions)
    assert positions == sorted(positions)


def test_monotone_recall_pool(one_pass_store):
    small = build_prompt_set(
        one_pass_store, ["brandon"],
        RetrievalConfig(max_prompt_concepts=10_000, temporal_window=1),
    )
    large = build_prompt_set(
        one_pass_store, ["brandon"],
        RetrievalConfig(max_prompt_concepts=10_000, temporal_window=None),
    )
    assert {e.label for e in small} <= {e.label for e in large}
