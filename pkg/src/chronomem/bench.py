"""Benchmark harness for the temporal-memory experiment.

Drives the bundled statement corpus through every configured memory system
(concept graph, vector baseline, hybrid, and a memoryless passthrough),
questions them at checkpoint repetitions, and scores retrieval with a
deterministic evidence metric. Answer quality is graded out of process: the
harness exports blind grading sheets (no system identifiers) and joins the
grades back in, or drives a provider-backed 3-point autograder.
"""

from __future__ import annotations

import csv
import json
import random
import re
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .graph import GraphStore
from .hybrid import hybrid_answer
from .providers import ChatProvider, ChatRequest
from .recall import CHRONOLOGICAL_PREFIX, RetrievalConfig, answer, essential_labels
from .update import RevisionPolicy, Reviser, knowledge_update
from .vecstore import VectorStore, answer_vec
from .extract import extract_concepts

__all__ = [
    "QuestionRow",
    "TemporalDataset",
    "DatasetError",
    "load_dataset",
    "bundled_dataset_path",
    "SYSTEMS",
    "DEFAULT_CHECKPOINTS",
    "QuestionRecord",
    "RunRecord",
    "BenchConfig",
    "run_temporal_bench",
    "evidence_recall",
    "coverable_questions",
    "accuracy_percent",
    "write_records",
    "read_records",
    "export_blind_grading",
    "import_grades",
    "autograde_3pt",
    "autograde_accuracy",
    "RubricGrader",
]

SYSTEMS = ("graph", "vector", "hybrid", "raw")
DEFAULT_CHECKPOINTS = (1, 5, 10, 15, 20, 25)
DEFAULT_RAW_BUDGET_CHARS = 16_000


class DatasetError(ValueError):
    pass


@dataclass(frozen=True)
class QuestionRow:
    question: str
    answer: str
    evidence_timestep: int  # 1-based index into initial + loop statements


@dataclass
class TemporalDataset:
    initial: list[str]
    loop: list[str]
    standard_questions: list[QuestionRow]
    long_range_questions: list[QuestionRow]

    @property
    def questions(self) -> list[tuple[str, QuestionRow]]:
        return [("standard", q) for q in self.standard_questions] + [
            ("long_range", q) for q in self.long_range_questions
        ]

    def evidence_statement(self, row: QuestionRow) -> str:
        t = row.evidence_timestep
        statements = self.initial + self.loop
        if not 1 <= t <= len(statements):
            raise DatasetError(f"evidence timestep {t} out of range")
        return statements[t - 1]

    def validate(self) -> None:
        if len(self.initial) != 10:
            raise DatasetError(f"[INITIAL] has {len(self.initial)} statements, expected 10")
        if len(self.loop) != 62:
            raise DatasetError(f"[LOOP] has {len(self.loop)} statements, expected 62")
        if len(self.standard_questions) != 21:
            raise DatasetError(
                f"[STANDARD] has {len(self.standard_questions)} questions, expected 21"
            )
        if not self.long_range_questions:
            raise DatasetError("[LONG_RANGE] is empty")
        for name, statements in (("INITIAL", self.initial), ("LOOP", self.loop)):
            if any(not s.strip() for s in statements):
                raise DatasetError(f"[{name}] contains an empty statement")
        for _, row in self.questions:
            self.evidence_statement(row)


_SECTION = re.compile(r"^\[(?P<name>[A-Z_]+)(?:\s+(?P<count>\d+))?\]$")


def bundled_dataset_path() -> Path:
    return Path(str(resources.files("chronomem").joinpath("data/temporal_dataset.txt")))


def load_dataset(path: str | Path | None = None) -> TemporalDataset:
    """Parse and validate a fixture file; None loads the bundled corpus."""
    path = Path(path) if path is not None else bundled_dataset_path()
    text = path.read_text(encoding="utf-8")
    sections: dict[str, list[str]] = {}
    declared: dict[str, int | None] = {}
    current: str | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = _SECTION.match(line.strip())
        if match:
            current = match.group("name")
            if current in sections:
                raise DatasetError(f"duplicate section [{current}] at line {line_no}")
            sections[current] = []
            count = match.group("count")
            declared[current] = int(count) if count else None
            continue
        if current is None:
            raise DatasetError(f"content before any section header at line {line_no}")
        sections[current].append(line)
    for required in ("INITIAL", "LOOP", "STANDARD", "LONG_RANGE"):
        if required not in sections:
            raise DatasetError(f"missing section [{required}]")
    for name, rows in sections.items():
        expected = declared.get(name)
        if expected is not None and len(rows) != expected:
            raise DatasetError(
                f"[{name}] declares {expected} rows but contains {len(rows)}"
            )

    def parse_questions(name: str) -> list[QuestionRow]:
        out = []
        for row in sections[name]:
            parts = row.split("\t")
            if len(parts) != 3:
                raise DatasetError(
                    f"[{name}] row is not question<TAB>answer<TAB>evidence: {row!r}"
                )
            try:
                evidence = int(parts[2])
            except ValueError as exc:
                raise DatasetError(
                    f"[{name}] evidence timestep is not an integer: {parts[2]!r}"
                ) from exc
            out.append(QuestionRow(parts[0].strip(), parts[1].strip(), evidence))
        return out

    dataset = TemporalDataset(
        initial=[s.strip() for s in sections["INITIAL"]],
        loop=[s.strip() for s in sections["LOOP"]],
        standard_questions=parse_questions("STANDARD"),
        long_range_questions=parse_questions("LONG_RANGE"),
    )
    dataset.validate()
    return dataset


@dataclass
class QuestionRecord:
    question_set: str
    question: str
    reference: str
    retrieved_context: str
    answer: str | None
    evidence_hit: bool
    context_exceeded: bool = False


@dataclass
class RunRecord:
    system: str
    checkpoint: int
    config: dict
    questions: list[QuestionRecord] = field(default_factory=list)
    context_exceeded_at_rep: int | None = None
    failed: str | None = None


@dataclass
class BenchConfig:
    retrieval: RetrievalConfig = field(default_factory=RetrievalConfig)
    revision: RevisionPolicy = field(default_factory=RevisionPolicy)
    raw_budget_chars: int = DEFAULT_RAW_BUDGET_CHARS
    vector_k: int = 5

    def snapshot(self, provider_mode: str, global_counter: int | None = None) -> dict:
        return {
            "max_prompt_concepts": self.retrieval.max_prompt_concepts,
            "max_distance": self.retrieval.max_distance,
            "alpha": self.retrieval.alpha,
            "temporal_window": self.retrieval.temporal_window,
            "revision_enabled": self.revision.enabled,
            "merges_per_revision": self.revision.merges_per_revision,
            "max_context_chars": self.revision.max_context_chars,
            "raw_budget_chars": self.raw_budget_chars,
            "vector_k": self.vector_k,
            "provider_mode": provider_mode,
            "global_counter": global_counter,
        }


def evidence_recall(dataset: TemporalDataset, row: QuestionRow, retrieved_context: str) -> bool:
    """True iff the latest truth statement for the question appears verbatim."""
    return dataset.evidence_statement(row) in retrieved_context


def coverable_questions(dataset: TemporalDataset, store: GraphStore) -> list[int]:
    """Indices of standard questions whose extracted nouns reach their evidence.

    A question is coverable when at least one of its essential labels exists
    in the store and is also extracted from the question's evidence statement,
    which guarantees (revision disabled) that the evidence sentence sits in a
    prompt-set concept's context. This is the machine-derived subset the
    acceptance suite checks evidence recall on.
    """
    covered = []
    for index, row in enumerate(dataset.standard_questions):
        essentials = set(essential_labels(row.question)) & set(store.nodes)
        evidence_labels = set(extract_concepts(dataset.evidence_statement(row)).concepts)
        if essentials & evidence_labels:
            covered.append(index)
    return covered


def run_temporal_bench(
    dataset: TemporalDataset,
    systems: tuple[str, ...] = SYSTEMS,
    repetitions: int = 25,
    checkpoints: tuple[int, ...] | None = None,
    config: BenchConfig | None = None,
    provider: ChatProvider | None = None,
    reviser: Reviser | None = None,
) -> list[RunRecord]:
    """Run the loop-and-question protocol and return one record per system per checkpoint.

    The initial block is ingested once, the loop block ``repetitions`` times;
    every statement is one knowledge update fed identically to the graph and
    vector backends. ``provider=None`` runs retrieval-only (fully offline and
    deterministic).
    """
    unknown = set(systems) - set(SYSTEMS)
    if unknown:
        raise ValueError(f"unknown systems: {sorted(unknown)}")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    checkpoints = tuple(
        c for c in (checkpoints or DEFAULT_CHECKPOINTS) if c <= repetitions
    )
    config = config or BenchConfig()
    provider_mode = "retrieval-only" if provider is None else "provider"
    graph_store = GraphStore()
    vector_store = VectorStore()
    raw_statements: list[str] = []
    raw_exceeded_at: int | None = None

    def ingest(statement: str) -> None:
        if "graph" in systems or "hybrid" in systems:
            knowledge_update(graph_store, statement, config.revision, reviser)
        if "vector" in systems or "hybrid" in systems:
            vector_store.add(statement)
        raw_statements.append(statement)

    def raw_context() -> str:
        return " ".join(raw_statements)

    records: list[RunRecord] = []

    def question_all(checkpoint: int) -> None:
        for system in systems:
            record = RunRecord(
                system=system,
                checkpoint=checkpoint,
                config=config.snapshot(provider_mode, graph_store.global_counter),
                context_exceeded_at_rep=raw_exceeded_at if system == "raw" else None,
            )
            for question_set, row in dataset.questions:
                try:
                    entry = _ask_one(
                        system, row, question_set, checkpoint
                    )
                except Exception as exc:
                    record.failed = f"{type(exc).__name__}: {exc}"
                    break
                record.questions.append(entry)
            records.append(record)

    def _ask_one(system, row, question_set, checkpoint) -> QuestionRecord:
        if system == "graph":
            trace = answer(graph_store, row.question, provider, config.retrieval)
            context, answered = trace.assembled_context, trace.answer
        elif system == "vector":
            trace = answer_vec(vector_store, row.question, provider, k=config.vector_k)
            context, answered = trace.prompt, trace.answer
        elif system == "hybrid":
            trace = hybrid_answer(
                graph_store, vector_store, row.question, provider,
                config.retrieval, k=config.vector_k, discriminator=provider,
            )
            context = (
                trace.graph_trace.assembled_context
                if trace.chosen == "graph" else trace.vector_trace.prompt
            )
            answered = trace.answer
        elif system == "raw":
            exceeded = raw_exceeded_at is not None and checkpoint >= raw_exceeded_at
            context = "" if exceeded else raw_context()
            prompt = " ".join([CHRONOLOGICAL_PREFIX, context, row.question])
            answered = None
            if provider is not None and not exceeded:
                answered = provider.complete(
                    ChatRequest(messages=[("user", prompt)])
                )
            return QuestionRecord(
                question_set=question_set,
                question=row.question,
                reference=row.answer,
                retrieved_context=context,
                answer=answered,
                evidence_hit=evidence_recall(dataset, row, context),
                context_exceeded=exceeded,
            )
        else:  # pragma: no cover - guarded above
            raise ValueError(system)
        return QuestionRecord(
            question_set=question_set,
            question=row.question,
            reference=row.answer,
            retrieved_context=context,
            answer=answered,
            evidence_hit=evidence_recall(dataset, row, context),
        )

    for statement in dataset.initial:
        ingest(statement)
    for rep in range(1, repetitions + 1):
        for statement in dataset.loop:
            ingest(statement)
        if raw_exceeded_at is None and len(raw_context()) > config.raw_budget_chars:
            raw_exceeded_at = rep
        if rep in checkpoints:
            question_all(rep)
    return records


def accuracy_percent(correct: int, total: int) -> float:
    """Accuracy as a percentage rounded to two decimals (e.g. 20/21 -> 95.24)."""
    if total <= 0:
        raise ValueError("total must be positive")
    return round(100.0 * correct / total, 2)


# --- record persistence -----------------------------------------------------

def write_records(records: list[RunRecord], path: str | Path) -> None:
    """JSON-lines, one record per line; byte-identical across identical runs."""
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(asdict(record), sort_keys=True) + "\n")


def read_records(path: str | Path) -> list[RunRecord]:
    records = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        doc = json.loads(line)
        questions = [QuestionRecord(**q) for q in doc.pop("questions")]
        records.append(RunRecord(questions=questions, **doc))
    return records


# --- blind grading ----------------------------------------------------------

def export_blind_grading(
    records: list[RunRecord],
    rows_path: str | Path,
    mapping_path: str | Path,
    seed: int = 1729,
) -> int:
    """Write a shuffled grading sheet plus the sealed row-id mapping.

    The sheet rows carry only (row id, question, reference answer, response);
    which system produced which response lives solely in the mapping file.
    Returns the number of rows exported.
    """
    entries = []
    for record in records:
        for q_index, q in enumerate(record.questions):
            if q.answer is None:
                continue
            entries.append((record, q_index, q))
    rng = random.Random(seed)
    rng.shuffle(entries)
    mapping = {}
    with open(rows_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["row_id", "question", "reference_answer", "response"])
        for position, (record, q_index, q) in enumerate(entries):
            row_id = f"row-{position:05d}"
            writer.writerow([row_id, q.question, q.reference, q.answer])
            mapping[row_id] = {
                "system": record.system,
                "checkpoint": record.checkpoint,
                "question_set": q.question_set,
                "question_index": q_index,
            }
    Path(mapping_path).write_text(
        json.dumps(mapping, indent=2, sort_keys=True), encoding="utf-8"
    )
    return len(entries)


def import_grades(
    grades_path: str | Path, mapping_path: str | Path
) -> dict[str, dict[int, float]]:
    """Join a graded sheet back through the mapping.

    The grades file is CSV with columns row_id and grade; a grade is
    "correct" or "incorrect" (1/0 also accepted). Returns accuracy percent
    per system per checkpoint.
    """
    mapping = json.loads(Path(mapping_path).read_text(encoding="utf-8"))
    tallies: dict[tuple[str, int], list[int]] = {}
    with open(grades_path, encoding="utf-8", newline="") as handle:
        for row in csv.DictReader(handle):
            row_id = row["row_id"].strip()
            if row_id not in mapping:
                raise ValueError(f"unknown row id {row_id!r} in grades file")
            raw = row["grade"].strip().lower()
            if raw in ("correct", "1", "true", "yes"):
                grade = 1
            elif raw in ("incorrect", "0", "false", "no"):
                grade = 0
            else:
                raise ValueError(f"unparseable grade {row['grade']!r} for {row_id}")
            meta = mapping[row_id]
            tallies.setdefault((meta["system"], meta["checkpoint"]), []).append(grade)
    result: dict[str, dict[int, float]] = {}
    for (system, checkpoint), grades in sorted(tallies.items()):
        result.setdefault(system, {})[checkpoint] = accuracy_percent(
            sum(grades), len(grades)
        )
    return result


# --- 3-point autograding ----------------------------------------------------

def _grading_prompt(question: str, reference: str, response: str) -> str:
    template = (
        resources.files("chronomem").joinpath("prompts/grading.txt")
        .read_text(encoding="utf-8")
    )
    return template.format(question=question, reference=reference, response=response)


def autograde_3pt(
    question: str, reference: str, response: str, provider: ChatProvider
) -> int | None:
    """Grade one response 0/1/2 via the provider; None when unparseable."""
    reply = provider.complete(
        ChatRequest(messages=[("user", _grading_prompt(question, reference, response))])
    )
    match = re.search(r"[012]", reply)
    return int(match.group()) if match else None


def autograde_accuracy(grades: list[int | None]) -> tuple[float, int]:
    """Aggregate 3-point grades: (total / max possible, ungraded count).

    Ungraded entries (None) are excluded from the denominator.
    """
    graded = [g for g in grades if g is not None]
    ungraded = len(grades) - len(graded)
    if not graded:
        raise ValueError("no graded entries")
    return sum(graded) / (2 * len(graded)), ungraded


class RubricGrader(ChatProvider):
    """Deterministic stand-in for a model grader; follows the bundled rubric.

    Parses the rubric prompt's fields and scores 2 for an exact match, 1 when
    every reference token appears in the response, otherwise 0.
    """

    def complete(self, request: ChatRequest) -> str:
        text = request.flattened()
        reference = _extract_field(text, "Reference answer:")
        response = _extract_field(text, "Response:")
        if reference is None or response is None:
            return "0"
        if response.strip() == reference.strip():
            return "2"
        ref_words = set(re.findall(r"[a-z0-9]+", reference.lower()))
        resp_words = set(re.findall(r"[a-z0-9]+", response.lower()))
        if ref_words and ref_words <= resp_words:
            return "1"
        return "0"


def _extract_field(text: str, marker: str) -> str | None:
    for line in text.splitlines():
        if line.startswith(marker):
            return line[len(marker):].strip()
    return None
