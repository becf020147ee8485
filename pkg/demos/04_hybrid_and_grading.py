"""Hybrid routing and the grading tools, fully offline.

A scripted provider stands in for the chat model so the whole flow runs
deterministically: both backends answer, the discriminator picks the less
uncertain response, and the 3-point autograder plus the perfect-discriminator
bound quantify the result.

Run: python demos/04_hybrid_and_grading.py
"""

from chronomem import (
    GraphStore,
    ScriptedProvider,
    VectorStore,
    hybrid_answer,
    knowledge_update,
    perfect_discriminator_accuracy,
)
from chronomem.bench import RubricGrader, autograde_3pt, autograde_accuracy

graph = GraphStore()
vectors = VectorStore()
for statement in ["Ines runs the observatory.", "Ines discovered a comet."]:
    knowledge_update(graph, statement)
    vectors.add(statement)

# The scripted provider answers confidently when its prompt carries graph
# context ordered chronologically, and hedges otherwise; the heuristic
# discriminator then prefers the confident answer.
provider = ScriptedProvider(
    script=[("true when read in chronological order", "Ines discovered a comet.")],
    default="I do not have enough information to answer the question.",
)
trace = hybrid_answer(graph, vectors, "What did Ines discover?", provider)
print(f"chosen backend: {trace.chosen} (basis: {trace.basis})")
print(f"answer: {trace.answer}")

# 3-point autograding with the deterministic rubric grader.
grader = RubricGrader()
grades = [
    autograde_3pt("What did Ines discover?", "a comet",
                  "Ines discovered a comet.", grader),
    autograde_3pt("What did Ines discover?", "a comet",
                  "Possibly a planet?", grader),
]
accuracy, ungraded = autograde_accuracy(grades)
print(f"\nautograder grades: {grades} -> accuracy {accuracy:.0%}, ungraded {ungraded}")

# If graph and vector answers fail on disjoint questions, a perfect
# discriminator would recover both.
graph_grades = [2, 0, 2, 0]
vector_grades = [0, 2, 0, 2]
bound = perfect_discriminator_accuracy(graph_grades, vector_grades)
print(f"perfect-discriminator bound on complementary grades: {bound:.0%}")
