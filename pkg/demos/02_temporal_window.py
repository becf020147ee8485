"""The temporal window: how retrieval forgets stale relations.

Each node and edge carries the counter value from the last update that
touched it. At question time, an edge E into node N is only traversed when
T(N) - s <= T(E) <= T(essential). Shrinking s prunes relations that have not
been refreshed alongside their nodes; s=None disables the lower bound.

Run: python demos/02_temporal_window.py
"""

from chronomem import GraphStore, knowledge_update, neighbors

store = GraphStore()

# Rosa starts out associated with a piano. Then many piano-free updates keep
# Rosa fresh while the piano edge goes stale.
knowledge_update(store, "Rosa plays the piano.")
for week in range(6):
    knowledge_update(store, f"Rosa visited Valencia on trip {week}.")

rosa = store.nodes["rosa"]
piano_edge = store.edge("rosa", "piano")
print(f"T(rosa)={rosa.temporal_index}  T(piano edge)={piano_edge.temporal_index}")

for window in (None, 6, 3, 1):
    found = [n.label for n, _ in neighbors(store, "rosa", max_distance=2,
                                           window=window)]
    label = "unlimited" if window is None else f"s={window}"
    print(f"{label:>10}: {found}")

# Hebbian strengthening: re-observing an adjacency bumps the edge strength,
# which feeds the strength + alpha * T ranking at prompt time.
print("\nedge strengths after repeated co-mentions:")
for _ in range(3):
    knowledge_update(store, "Rosa tunes the piano.")
piano_edge = store.edge("rosa", "piano")
print(f"  rosa-piano strength={piano_edge.strength} T={piano_edge.temporal_index}")

found = [n.label for n, _ in neighbors(store, "rosa", max_distance=2, window=3)]
print(f"  with s=3 the refreshed piano edge is back: {found}")
