"""Graph memory vs the vector baseline on the bundled temporal benchmark.

Runs the offline protocol (no model calls): ingest the initial block, replay
the update loop, and check at each checkpoint whether the latest truth
statement for every question made it into the retrieved context. The graph
path keeps per-concept chronology; the vector path ranks by similarity alone
and the memoryless baseline simply overflows.

Run: python demos/03_baseline_comparison.py
"""

from chronomem.bench import load_dataset, run_temporal_bench

dataset = load_dataset()
records = run_temporal_bench(dataset, repetitions=5, checkpoints=(1, 3, 5))

print(f"{'system':<8} {'checkpoint':>10} {'standard':>10} {'long-range':>11}")
for record in records:
    standard = [q for q in record.questions if q.question_set == "standard"]
    long_range = [q for q in record.questions if q.question_set == "long_range"]
    std = sum(q.evidence_hit for q in standard)
    lng = sum(q.evidence_hit for q in long_range)
    note = ""
    if record.system == "raw" and record.context_exceeded_at_rep:
        note = f"  (context budget exceeded at rep {record.context_exceeded_at_rep})"
    print(f"{record.system:<8} {record.checkpoint:>10} "
          f"{std:>7}/{len(standard)} {lng:>8}/{len(long_range)}{note}")

# Where the vector baseline goes wrong: similarity retrieves color sentences,
# but nothing prefers the latest one.
from chronomem import VectorStore, answer_vec

vectors = VectorStore()
for statement in dataset.initial + dataset.loop:
    vectors.add(statement)
trace = answer_vec(vectors, "What is Brandon's favorite color?")
print("\nvector top-5 for the color question (no recency ordering):")
for context, score in zip(trace.contexts, trace.scores):
    print(f"  {score:.3f}  {context}")
