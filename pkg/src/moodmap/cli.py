"""Operator command line: run the pipeline offline, probe the classifier,
serve the API, and export reports.

Exit codes: 0 success (possibly with warnings), 1 fatal error, 2 usage error.
"""

from __future__ import annotations

import json
import logging
from datetime import date
from pathlib import Path

import click

from . import aggregate as agg_mod
from . import api, emotions, geo, ingest, jobs, pipeline
from .store import MoodStore

logger = logging.getLogger(__name__)


def _load_lexicon(path):
    try:
        return emotions.load_lexicon(path) if path else emotions.load_default_lexicon()
    except (OSError, emotions.LexiconError) as exc:
        raise click.ClickException(f"lexicon: {exc}")


def _load_boundaries(path):
    try:
        return geo.load_boundaries(path) if path else geo.load_default_boundaries()
    except (OSError, geo.BoundaryError) as exc:
        raise click.ClickException(f"boundaries: {exc}")


def _load_events(path):
    try:
        if path:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        else:
            from importlib import resources
            doc = json.loads(resources.files("moodmap").joinpath("data/events.json").read_text())
        return [
            agg_mod.TriggerEvent(name=e["name"], date=date.fromisoformat(e["date"]))
            for e in doc["events"]
        ]
    except (OSError, KeyError, ValueError) as exc:
        raise click.ClickException(f"events: {exc}")


def _parse_date(text: str, label: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise click.ClickException(f"bad {label} {text!r}, expected YYYY-MM-DD")


def _region_from_code(code: str, store: MoodStore) -> geo.RegionId:
    if code.upper() == geo.NATION_CODE:
        return geo.NATION
    if code.upper() in geo.REQUIRED_STATE_CODES:
        return geo.RegionId("state", code.upper())
    match = next((c for c in store.known_cities if c.lower() == code.lower()), None)
    if match:
        return geo.RegionId("city", match)
    raise click.ClickException(f"unknown region {code!r}")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
def main(verbose):
    """Mood analytics pipeline and portal service."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.argument("text")
@click.option("--lexicon", envvar="MOODMAP_LEXICON", default=None, help="Keyword lexicon CSV.")
@click.option("--normalization", type=click.Choice(["tokens", "lexicon"]), default="tokens",
              help="Denominator used for the displayed ranks.")
def classify(text, lexicon, normalization):
    """Classify one post and print its label and ranks."""
    lex = _load_lexicon(lexicon)
    label, scores = emotions.classify(text, lex)
    click.echo(label)
    shown = scores.normalized(lex, mode=normalization)
    for e in emotions.EMOTIONS:
        click.echo(f"  {e}: matched={scores.matched.get(e, 0)} rank={shown[e]:.4f}")


@main.command("ingest")
@click.argument("posts")
@click.argument("covid", required=False)
@click.option("--store", "store_path", envvar="MOODMAP_STORE", default="moodmap.db", show_default=True)
@click.option("--lexicon", envvar="MOODMAP_LEXICON", default=None)
@click.option("--boundaries", envvar="MOODMAP_BOUNDARIES", default=None)
@click.option("--daily-cap", type=int, default=ingest.DEFAULT_DAILY_CAP, show_default=True)
@click.option("--per-state-cap", type=int, default=None, help="Optional per-state daily cap.")
@click.option("--hashtag", "hashtags", multiple=True,
              help="Tracked hashtag (repeatable); defaults to the built-in set.")
@click.option("--csv-out", type=click.Path(dir_okay=False), default=None,
              help="Also export the aggregates as CSV.")
def ingest_cmd(posts, covid, store_path, lexicon, boundaries, daily_cap, per_state_cap, hashtags, csv_out):
    """Ingest a post file (and optional case file), classify, and store."""
    lex = _load_lexicon(lexicon)
    bset = _load_boundaries(boundaries)
    cfg = ingest.IngestConfig(
        tracked_hashtags=frozenset(hashtags) if hashtags else frozenset(
            ingest.normalize_hashtag(t) for t in ingest.DEFAULT_HASHTAGS),
        daily_cap=daily_cap,
        per_state_cap=per_state_cap,
    )
    try:
        result = pipeline.run(posts, covid, lex, bset, cfg)
    except (OSError, ingest.CovidDataError) as exc:
        raise click.ClickException(str(exc))
    store = MoodStore(store_path)
    receipt = store.upsert_day(result.aggregates, result.covid)
    stats = result.ingest_stats
    click.echo(f"ingested {stats.emitted} posts over {len(result.days)} day(s)")
    for e in emotions.ALL_LABELS:
        click.echo(f"  {e}: {result.emotion_totals[e]}")
    click.echo(
        f"store: {receipt['inserted']} inserted, {receipt['updated']} updated "
        f"({receipt['changed']} changed), covid rows: {receipt['covid_inserted']} inserted"
    )
    if stats.skipped_malformed:
        click.echo(f"warning: skipped {stats.skipped_malformed} malformed line(s)", err=True)
    if stats.skipped_capped:
        click.echo(f"warning: daily cap dropped {stats.skipped_capped} post(s)", err=True)
    if csv_out:
        with open(csv_out, "w", encoding="utf-8", newline="") as fh:
            agg_mod.export_csv(result.aggregates, fh)
        click.echo(f"wrote {csv_out}")


@main.command()
@click.option("--host", envvar="MOODMAP_HOST", default="127.0.0.1", show_default=True)
@click.option("--port", envvar="MOODMAP_PORT", type=int, default=8000, show_default=True)
@click.option("--store", "store_path", envvar="MOODMAP_STORE", default="moodmap.db", show_default=True)
@click.option("--data-dir", envvar="MOODMAP_DATA_DIR", default=None,
              help="Directory with posts-YYYY-MM-DD.jsonl / covid-YYYY-MM-DD.json for the daily job.")
@click.option("--lexicon", envvar="MOODMAP_LEXICON", default=None)
@click.option("--boundaries", envvar="MOODMAP_BOUNDARIES", default=None)
@click.option("--schedule", envvar="MOODMAP_SCHEDULE", default=jobs.DEFAULT_SCHEDULE, show_default=True,
              help="Daily refresh wall-clock time with UTC offset.")
@click.option("--no-schedule", is_flag=True, help="Do not arm the daily job.")
@click.option("--events", "events_path", envvar="MOODMAP_EVENTS", default=None,
              help="Trigger events JSON; defaults to the bundled list.")
@click.option("--admin-token", envvar="MOODMAP_ADMIN_TOKEN", default=None)
@click.option("--ui-dir", envvar="MOODMAP_UI_DIR", default=None,
              help="Static portal assets to serve at /.")
def serve(host, port, store_path, data_dir, lexicon, boundaries, schedule, no_schedule,
          events_path, admin_token, ui_dir):
    """Serve the portal API (and optionally the portal itself)."""
    try:
        sched = jobs.parse_schedule(schedule)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    lex = _load_lexicon(lexicon)
    bset = _load_boundaries(boundaries)
    store = MoodStore(store_path)

    events = _load_events(events_path)
    stored_range = store.data_range()
    if stored_range is not None:
        kept = [e for e in events if stored_range[0] <= e.date <= stored_range[1]]
        dropped = len(events) - len(kept)
        if dropped:
            logger.warning("dropping %d trigger event(s) outside the stored data range", dropped)
        events = kept
    store.set_events(events)

    app = api.create_app(
        store,
        boundaries_path=Path(boundaries) if boundaries else None,
        admin_token=admin_token,
        data_dir=Path(data_dir) if data_dir else None,
        lexicon=lex,
        boundaries=bset,
        ui_dir=Path(ui_dir) if ui_dir else None,
    )
    if not no_schedule and data_dir:
        scheduler = jobs.DailyScheduler(store, Path(data_dir), lex, bset, sched)
        scheduler.start()
        click.echo(f"daily refresh armed at {sched}")
    elif not no_schedule:
        click.echo("no --data-dir given; daily refresh not armed", err=True)

    import uvicorn

    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except SystemExit as exc:  # uvicorn exits non-zero when the port is busy
        raise click.ClickException(f"server failed to start (exit {exc.code})")


@main.command()
@click.argument("region")
@click.argument("start")
@click.argument("end")
@click.option("-o", "--out", type=click.Path(dir_okay=False), required=True, help="Report JSON path.")
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False), default=None,
              help="Also export the per-day aggregate rows as CSV.")
@click.option("--store", "store_path", envvar="MOODMAP_STORE", default="moodmap.db", show_default=True)
def report(region, start, end, out, csv_out, store_path):
    """Write the range report for a region to a file."""
    store = MoodStore(store_path)
    rid = _region_from_code(region, store)
    start_d = _parse_date(start, "start date")
    end_d = _parse_date(end, "end date")
    if start_d > end_d:
        raise click.ClickException(f"invalid range: {start} > {end}")
    aggs = store.aggregates_for(rid, start_d, end_d)
    covid = store.covid_for(rid, start_d, end_d)
    doc = agg_mod.build_report(rid, start_d, end_d, aggs, covid)
    Path(out).write_text(json.dumps(doc, indent=2), encoding="utf-8")
    click.echo(f"wrote {out}")
    if csv_out:
        day_aggs = [
            agg_mod.RegionDayAggregate.from_counts(rid, date.fromisoformat(d["date"]), d["counts"])
            for d in doc["days"]
        ]
        with open(csv_out, "w", encoding="utf-8", newline="") as fh:
            agg_mod.export_csv(day_aggs, fh)
        click.echo(f"wrote {csv_out}")


@main.command()
@click.argument("day")
@click.option("-o", "--out", type=click.Path(dir_okay=False), default=None)
@click.option("--store", "store_path", envvar="MOODMAP_STORE", default="moodmap.db", show_default=True)
def snapshot(day, out, store_path):
    """Print (or write) the per-state map snapshot for one day."""
    store = MoodStore(store_path)
    doc = store.snapshot(_parse_date(day, "day"))
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out}")
    else:
        click.echo(text)


if __name__ == "__main__":
    main()
