"""Command-line interface.

Every subcommand is a thin shell around the library: stores are loaded from
their snapshot files, mutated through the same operations the HTTP service
uses, and written back. Exit codes: 0 success, 1 usage error, 2 runtime
error.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path

import click

from . import bench as bench_mod
from .config import AppConfig, load_config
from .graph import GraphStore, load as load_graph, snapshot as graph_snapshot
from .hybrid import hybrid_answer
from .recall import answer
from .update import knowledge_update
from .vecstore import VectorStore, answer_vec

MODES = ("graph", "vector", "hybrid", "retrieval-only")


def _load_stores(cfg: AppConfig) -> tuple[GraphStore, VectorStore]:
    graph_path = Path(cfg.graph_path)
    vector_path = Path(cfg.vector_path)
    graph = load_graph(graph_path.read_bytes()) if graph_path.exists() else GraphStore()
    vectors = (
        VectorStore.load(vector_path.read_bytes())
        if vector_path.exists() else VectorStore()
    )
    return graph, vectors


def _save_stores(cfg: AppConfig, graph: GraphStore, vectors: VectorStore) -> None:
    Path(cfg.graph_path).write_bytes(graph_snapshot(graph))
    Path(cfg.vector_path).write_bytes(vectors.snapshot())


def _trace_doc(trace) -> dict:
    return dataclasses.asdict(trace)


@click.group()
@click.option("--config", "config_file", type=click.Path(exists=True), default=None,
              help="JSON config file.")
@click.option("--graph-store", default=None, help="Graph snapshot path.")
@click.option("--vector-store", default=None, help="Vector snapshot path.")
@click.pass_context
def cli_group(ctx, config_file, graph_store, vector_store):
    """Temporal concept-graph memory engine."""
    ctx.obj = load_config(
        config_file,
        overrides={"graph_path": graph_store, "vector_path": vector_store},
    )


@cli_group.command()
@click.argument("source")
@click.option("--per-document", is_flag=True,
              help="Ingest the whole input as one knowledge update instead of per line.")
@click.pass_obj
def ingest(cfg: AppConfig, source, per_document):
    """Ingest SOURCE (a file path, or - for stdin); one update per line."""
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    graph, vectors = _load_stores(cfg)
    units = [text] if per_document else [ln for ln in text.splitlines() if ln.strip()]
    for unit in units:
        knowledge_update(graph, unit, cfg.revision)
        vectors.add(unit)
    _save_stores(cfg, graph, vectors)
    click.echo(f"ingested {len(units)} update(s); counter={graph.global_counter}")


@cli_group.command()
@click.argument("question")
@click.option("--mode", type=click.Choice(MODES), default="retrieval-only")
@click.option("--k", default=5, show_default=True, help="Vector top-k.")
@click.pass_obj
def ask(cfg: AppConfig, question, mode, k):
    """Answer QUESTION from memory; prints the full trace as JSON."""
    graph, vectors = _load_stores(cfg)
    provider = cfg.provider()
    if mode == "retrieval-only":
        trace = answer(graph, question, None, cfg.retrieval)
    elif mode == "graph":
        trace = answer(graph, question, provider, cfg.retrieval)
    elif mode == "vector":
        trace = answer_vec(vectors, question, provider, k=k)
    else:
        trace = hybrid_answer(graph, vectors, question, provider, cfg.retrieval,
                              k=k, discriminator=provider)
    click.echo(json.dumps(_trace_doc(trace), indent=2, sort_keys=True))


@cli_group.command()
@click.pass_obj
def repl(cfg: AppConfig):
    """Interactive loop: plain lines are knowledge updates, '?'-prefixed lines are questions."""
    graph, vectors = _load_stores(cfg)
    provider = cfg.provider()
    click.echo("statements update memory; start a line with ? to ask; empty line quits")
    while True:
        try:
            line = input("> ").strip()
        except EOFError:
            break
        if not line:
            break
        if line.startswith("?"):
            question = line[1:].strip()
            trace = answer(graph, question, provider, cfg.retrieval)
            click.echo(trace.answer if trace.answer is not None
                       else trace.assembled_context)
        else:
            report = knowledge_update(graph, line, cfg.revision)
            vectors.add(line)
            click.echo(f"t={report.t_after}")
    _save_stores(cfg, graph, vectors)


@cli_group.group()
def bench():
    """Benchmark harness subcommands."""


@bench.command("run")
@click.option("--reps", default=25, show_default=True)
@click.option("--offline", is_flag=True, help="Retrieval-only; no provider calls.")
@click.option("--dataset", type=click.Path(exists=True), default=None,
              help="Fixture path (defaults to the bundled corpus).")
@click.option("--out", default="bench_records.jsonl", show_default=True)
@click.option("--systems", default=",".join(bench_mod.SYSTEMS), show_default=True)
@click.pass_obj
def bench_run(cfg: AppConfig, reps, offline, dataset, out, systems):
    """Drive the temporal benchmark and write JSON-lines records."""
    data = bench_mod.load_dataset(dataset)
    provider = None if offline else cfg.provider()
    config = bench_mod.BenchConfig(
        retrieval=cfg.retrieval, revision=cfg.revision,
        raw_budget_chars=cfg.raw_budget_chars,
    )
    records = bench_mod.run_temporal_bench(
        data,
        systems=tuple(s.strip() for s in systems.split(",") if s.strip()),
        repetitions=reps,
        checkpoints=cfg.bench_checkpoints,
        config=config,
        provider=provider,
    )
    bench_mod.write_records(records, out)
    hits = sum(q.evidence_hit for r in records for q in r.questions)
    asked = sum(len(r.questions) for r in records)
    click.echo(f"{len(records)} records -> {out} (evidence hits {hits}/{asked})")


@bench.command("export")
@click.option("--records", "records_path", required=True, type=click.Path(exists=True))
@click.option("--out", default="grading_sheet.csv", show_default=True)
@click.option("--mapping", default="grading_mapping.json", show_default=True)
@click.option("--seed", default=1729, show_default=True)
def bench_export(records_path, out, mapping, seed):
    """Export a blind grading sheet (no system identifiers) plus its sealed mapping."""
    records = bench_mod.read_records(records_path)
    count = bench_mod.export_blind_grading(records, out, mapping, seed=seed)
    click.echo(f"exported {count} rows -> {out} (mapping -> {mapping})")


@bench.command("grade")
@click.option("--grades", "grades_path", required=True, type=click.Path(exists=True))
@click.option("--mapping", required=True, type=click.Path(exists=True))
def bench_grade(grades_path, mapping):
    """Join human grades back through the mapping and print per-system accuracy."""
    result = bench_mod.import_grades(grades_path, mapping)
    click.echo(json.dumps(result, indent=2, sort_keys=True))


@cli_group.group()
def graph():
    """Graph store subcommands."""


@graph.command("export")
@click.option("--out", default="-", show_default=True, help="Output path or - for stdout.")
@click.pass_obj
def graph_export(cfg: AppConfig, out):
    """Write the graph snapshot document."""
    store, _ = _load_stores(cfg)
    payload = graph_snapshot(store)
    if out == "-":
        click.echo(payload.decode("utf-8"))
    else:
        Path(out).write_bytes(payload)
        click.echo(f"snapshot -> {out}")


@cli_group.command()
@click.pass_obj
def stats(cfg: AppConfig):
    """Counter, node, edge, and chunk counts."""
    store, vectors = _load_stores(cfg)
    click.echo(json.dumps({
        "counter": store.global_counter,
        "nodes": len(store.nodes),
        "edges": len(store.edges),
        "chunks": len(vectors.chunks),
    }, sort_keys=True))


@cli_group.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.pass_obj
def serve(cfg: AppConfig, host, port):
    """Run the HTTP service (requires uvicorn)."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(cfg), host=host, port=port)


def cli(argv: list[str] | None = None) -> int:
    """Programmatic entry point with the documented exit-code contract."""
    try:
        cli_group.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        return 1
    except click.exceptions.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(cli())
