"""Memory basics: ingest statements, watch beliefs update, ask questions.

Every ingested statement is one timestep. Later statements override earlier
ones at question time because each concept's context accumulates in
chronological order and the prompt says to read it that way.

Run: python demos/01_memory_basics.py
"""

from chronomem import GraphStore, answer, knowledge_update

store = GraphStore()

story = [
    "Maya works for Orion Labs.",
    "Maya's favorite color is blue.",
    "Maya adopted a puppy called Biscuit.",
    "Maya got promoted to principal engineer.",
    "Maya's favorite color is yellow.",  # belief update: blue -> yellow
]

for statement in story:
    report = knowledge_update(store, statement)
    print(f"t={report.t_after}  +{report.merge.nodes_created} nodes  {statement}")

print("\nconcepts in the graph:", ", ".join(sorted(store.nodes)))

# The node for 'maya' kept every sentence, in order:
print("\nmaya's accumulated context:")
print(" ", store.nodes["maya"].context)

# Retrieval-only mode shows exactly what a chat model would be given.
trace = answer(store, "What is Maya's favorite color?")
print("\nessential concepts:", trace.essentials_found)
print("prompt handed to the model:")
print(" ", trace.assembled_context)

# The yellow statement appears after the blue one, so a model instructed to
# read chronologically answers 'yellow'.
assert trace.assembled_context.rfind("yellow") > trace.assembled_context.rfind("blue")
print("\nthe latest truth (yellow) appears after the superseded one (blue)")
