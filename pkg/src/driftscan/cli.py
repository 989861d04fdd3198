"""Command-line entry points: synth, profile, evaluate, serve, export."""

import logging
import sys
from pathlib import Path

import click

from . import drift, profile, synth
from .ingest import load_dataset, write_dataset
from .schema import load_schema
from .serialize import parse_duration, read_json, to_json_bytes, write_json
from .service import build_state, create_app, export_bundle, file_hash


@click.group()
def main():
    """Covariate drift analysis pipeline."""
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")


def _fail(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@main.command("profile")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--schema", "schema_path", required=True, type=click.Path(exists=True))
@click.option("--bins", default=10, show_default=True, type=int)
@click.option("--windows", default=100, show_default=True, type=int)
@click.option("--window", "window_length", default="P1D", show_default=True)
@click.option("--seed", default=42, show_default=True, type=int)
@click.option("--out", default="profile.json", show_default=True, type=click.Path())
def cmd_profile(input_path, schema_path, bins, windows, window_length, seed, out):
    """Learn a reference profile from a reference dataset."""
    try:
        schema = load_schema(schema_path)
        dataset = load_dataset(input_path, schema)
        result = profile.learn_reference(
            dataset,
            schema,
            bin_count=bins,
            window_length=parse_duration(window_length),
            window_count=windows,
            seed=seed,
        )
        profile.save_profile(result, out)
    except (ValueError, OSError) as exc:
        _fail(exc)
    click.echo(f"wrote {out}")


@main.command("evaluate")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True))
@click.option("--granularity", default="P1D", show_default=True)
@click.option("--alpha", default=0.01, show_default=True, type=float)
@click.option("--analysis-threshold", default=0.25, show_default=True, type=float)
@click.option("--out", default="result.json", show_default=True, type=click.Path())
def cmd_evaluate(input_path, profile_path, granularity, alpha, analysis_threshold, out):
    """Evaluate a dataset against a reference profile."""
    try:
        thresholds = drift.Thresholds(alpha, analysis_threshold)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        ref = profile.load_profile(profile_path)
        dataset = load_dataset(input_path, ref.schema)
        matrix = drift.evaluate(dataset, ref, parse_duration(granularity), thresholds)
        doc = matrix.to_dict()
        doc["profile_hash"] = file_hash(profile_path)
        write_json(out, doc)
    except (ValueError, OSError) as exc:
        _fail(exc)
    click.echo(f"wrote {out}")


@main.command("synth")
@click.option("--out-dir", default=".", show_default=True, type=click.Path())
@click.option("--scenario", "scenario_path", type=click.Path(exists=True), help="Scenario JSON file; overrides the inline flags.")
@click.option("--numeric", default=12, show_default=True, type=int)
@click.option("--categorical", default=8, show_default=True, type=int)
@click.option("--days", default=60, show_default=True, type=int)
@click.option("--rows-per-day", default=1000, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option(
    "--drift",
    "drift_specs",
    multiple=True,
    help="Drift as feature:kind:onset_day:magnitude, e.g. num_05:sudden_shift:30:4.0",
)
def cmd_synth(out_dir, scenario_path, numeric, categorical, days, rows_per_day, seed, drift_specs):
    """Generate a synthetic reference/evaluation dataset pair."""
    try:
        if scenario_path:
            scenario = synth.DriftScenario.from_dict(read_json(scenario_path))
        else:
            drifts = []
            for text in drift_specs:
                parts = text.split(":")
                if len(parts) != 4:
                    raise ValueError(f"bad --drift value {text!r}")
                drifts.append(
                    synth.DriftSpec(parts[0], int(parts[2]), parts[1], float(parts[3]))
                )
            scenario = synth.DriftScenario(
                numeric_features=numeric,
                categorical_features=categorical,
                days=days,
                rows_per_day=rows_per_day,
                drifts=tuple(drifts),
                seed=seed,
            )
        reference, evaluation, schema = synth.generate(scenario)
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_dataset(reference, out / "reference.csv")
        write_dataset(evaluation, out / "evaluation.csv")
        write_json(out / "schema.json", schema.to_dict())
    except (ValueError, KeyError, OSError) as exc:
        _fail(exc)
    click.echo(f"wrote reference.csv, evaluation.csv, schema.json in {out_dir}")


def _load_state(profile_path, result_path, input_path):
    return build_state(profile_path, result_path, input_path)


@main.command("serve")
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True))
@click.option("--result", "result_path", required=True, type=click.Path(exists=True))
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--port", default=8080, show_default=True, type=int)
def cmd_serve(profile_path, result_path, input_path, port):
    """Serve the read-only analysis API."""
    import uvicorn

    try:
        state = _load_state(profile_path, result_path, input_path)
    except (ValueError, OSError) as exc:
        _fail(exc)
    app = create_app(state)
    try:
        uvicorn.run(app, host="127.0.0.1", port=port)
    except SystemExit:
        raise
    except OSError as exc:
        _fail(exc)


@main.command("export")
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True))
@click.option("--result", "result_path", required=True, type=click.Path(exists=True))
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--out-dir", default="bundle", show_default=True, type=click.Path())
def cmd_export(profile_path, result_path, input_path, out_dir):
    """Export a static bundle mirroring the live API."""
    try:
        state = _load_state(profile_path, result_path, input_path)
        export_bundle(state, out_dir)
    except (ValueError, OSError) as exc:
        _fail(exc)
    click.echo(f"wrote bundle to {out_dir}")


if __name__ == "__main__":
    main()
