"""Embedded temporal concept graph.

Nodes are stemmed concept labels carrying accumulated context; edges are
undirected, strengthened by one each time their adjacency is re-observed.
Every node and edge carries the value of the store's global update counter
from the last time it was touched, which drives the temporal-window
constraint at retrieval time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .extract import ConceptBatch

__all__ = [
    "ConceptNode",
    "Relation",
    "GraphStore",
    "MergeReport",
    "merge_batch",
    "neighbors",
    "snapshot",
    "load",
    "SnapshotError",
]

SNAPSHOT_VERSION = 1


class SnapshotError(ValueError):
    """Raised when a snapshot stream cannot be decoded."""


@dataclass
class ConceptNode:
    label: str
    context: str
    temporal_index: int
    merge_count: int = 1
    revisions_done: int = 0


@dataclass
class Relation:
    a: str
    b: str
    strength: int
    temporal_index: int

    @property
    def endpoints(self) -> tuple[str, str]:
        return (self.a, self.b)


def _canonical(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass
class GraphStore:
    nodes: dict[str, ConceptNode] = field(default_factory=dict)
    edges: dict[tuple[str, str], Relation] = field(default_factory=dict)
    global_counter: int = 0

    def node(self, label: str) -> ConceptNode | None:
        return self.nodes.get(label)

    def edge(self, a: str, b: str) -> Relation | None:
        return self.edges.get(_canonical(a, b))

    def edges_of(self, label: str) -> list[Relation]:
        return [r for pair, r in self.edges.items() if label in pair]


@dataclass
class MergeReport:
    nodes_created: int = 0
    nodes_merged: int = 0
    edges_created: int = 0
    edges_strengthened: int = 0


def merge_batch(store: GraphStore, batch: ConceptBatch) -> MergeReport:
    """Merge an extracted batch into the store at the current counter value.

    The caller is responsible for having incremented ``store.global_counter``
    for this update. Raises ValueError if a relation references a label that
    is not among the batch concepts (an extractor bug, not a data condition).
    """
    for a, b in batch.relations:
        if a not in batch.concepts or b not in batch.concepts:
            raise ValueError(
                f"relation ({a}, {b}) references a label missing from the batch"
            )
    report = MergeReport()
    t = store.global_counter
    for label, entry in batch.concepts.items():
        node = store.nodes.get(label)
        if node is None:
            store.nodes[label] = ConceptNode(
                label=label, context=entry.context, temporal_index=t
            )
            report.nodes_created += 1
        else:
            node.context = (
                entry.context if not node.context
                else node.context + " " + entry.context
            )
            node.merge_count += 1
            node.temporal_index = t
            report.nodes_merged += 1
    for a, b in batch.relations:
        pair = _canonical(a, b)
        relation = store.edges.get(pair)
        if relation is None:
            store.edges[pair] = Relation(pair[0], pair[1], strength=1, temporal_index=t)
            report.edges_created += 1
        else:
            relation.strength += 1
            relation.temporal_index = t
            report.edges_strengthened += 1
    return report


def neighbors(
    store: GraphStore,
    essential: str,
    max_distance: int = 2,
    window: int | None = 3,
    alpha: float = 3.0,
) -> list[tuple[ConceptNode, Relation]]:
    """Nodes reachable from the essential concept under the temporal window.

    Breadth-first over at most ``max_distance`` hops; an edge E into node N is
    traversable only when T(N) - window <= T(E) <= T(essential) (the lower
    bound disappears when ``window`` is None, i.e. unlimited). Each returned
    node is paired with its scoring relation: the best-scoring (strength +
    alpha * T) edge incident to it on a shortest qualifying path. The
    essential itself is excluded. Results come back sorted by label.
    """
    if max_distance < 1:
        raise ValueError("max_distance must be >= 1")
    origin = store.nodes.get(essential)
    if origin is None:
        return []
    t_origin = origin.temporal_index

    def admissible(edge: Relation, target: ConceptNode) -> bool:
        if edge.temporal_index > t_origin:
            return False
        if window is None:
            return True
        return target.temporal_index - window <= edge.temporal_index

    def score(edge: Relation) -> float:
        return edge.strength + alpha * edge.temporal_index

    best: dict[str, tuple[int, Relation]] = {}  # label -> (depth, scoring edge)
    frontier = {essential}
    seen = {essential}
    for depth in range(1, max_distance + 1):
        next_frontier: set[str] = set()
        for pair, edge in store.edges.items():
            a, b = pair
            for source, target_label in ((a, b), (b, a)):
                if source not in frontier or target_label in seen:
                    continue
                target = store.nodes[target_label]
                if not admissible(edge, target):
                    continue
                held = best.get(target_label)
                if held is None or score(edge) > score(held[1]):
                    best[target_label] = (depth, edge)
                next_frontier.add(target_label)
        seen |= next_frontier
        frontier = next_frontier
        if not frontier:
            break
    return sorted(
        ((store.nodes[label], edge) for label, (_, edge) in best.items()),
        key=lambda item: item[0].label,
    )


def snapshot(store: GraphStore) -> bytes:
    """Serialize the store to deterministic, diff-friendly JSON bytes."""
    doc = {
        "version": SNAPSHOT_VERSION,
        "counter": store.global_counter,
        "nodes": {
            node.label: {
                "context": node.context,
                "merges": node.merge_count,
                "revisions": node.revisions_done,
                "t": node.temporal_index,
            }
            for node in store.nodes.values()
        },
        "edges": [
            {"a": r.a, "b": r.b, "strength": r.strength, "t": r.temporal_index}
            for _, r in sorted(store.edges.items())
        ],
    }
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2).encode("utf-8")


def load(stream: bytes) -> GraphStore:
    """Rebuild a store from snapshot bytes produced by :func:`snapshot`."""
    try:
        doc = json.loads(stream.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        offset = getattr(exc, "pos", getattr(exc, "start", "?"))
        raise SnapshotError(f"malformed snapshot at byte offset {offset}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SnapshotError("malformed snapshot: top-level document must be an object")
    version = doc.get("version")
    if version != SNAPSHOT_VERSION:
        raise SnapshotError(
            f"unsupported snapshot version {version!r} (expected {SNAPSHOT_VERSION})"
        )
    store = GraphStore(global_counter=int(doc["counter"]))
    for label, fields in doc.get("nodes", {}).items():
        store.nodes[label] = ConceptNode(
            label=label,
            context=fields["context"],
            temporal_index=int(fields["t"]),
            merge_count=int(fields["merges"]),
            revisions_done=int(fields.get("revisions", 0)),
        )
    for entry in doc.get("edges", []):
        a, b = entry["a"], entry["b"]
        if a not in store.nodes or b not in store.nodes:
            raise SnapshotError(f"edge ({a}, {b}) references a missing node")
        store.edges[_canonical(a, b)] = Relation(
            a, b, strength=int(entry["strength"]), temporal_index=int(entry["t"])
        )
    return store
