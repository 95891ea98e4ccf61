"""Daily refresh job and its clock-time scheduler.

The job ingests the previous day's post and case files from the data
directory, runs the pipeline, and upserts the results; it is idempotent (a
day already in the store is skipped) and atomic (a failing run leaves the
store untouched).  The scheduler fires the job once per day at a configured
local wall-clock time, 16:00 IST by default.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from datetime import date, datetime, time, timedelta, timezone
from pathlib import Path
from typing import Optional

from . import emotions, geo, ingest, pipeline
from .store import MoodStore

logger = logging.getLogger(__name__)

DEFAULT_SCHEDULE = "16:00+05:30"


@dataclass(frozen=True)
class Schedule:
    at: time
    tz: timezone

    def __str__(self) -> str:
        offset = self.tz.utcoffset(None)
        total = int(offset.total_seconds())
        sign = "+" if total >= 0 else "-"
        total = abs(total)
        return f"{self.at.hour:02d}:{self.at.minute:02d}{sign}{total // 3600:02d}:{total % 3600 // 60:02d}"


def parse_schedule(text: str) -> Schedule:
    """Parse 'HH:MM+HH:MM' (wall-clock time plus fixed UTC offset)."""
    text = text.strip()
    plus = max(text.find("+"), text.find("-"))
    if plus <= 0:
        raise ValueError(f"bad schedule {text!r}, expected like '16:00+05:30'")
    clock, offset = text[:plus], text[plus:]
    try:
        hours, minutes = clock.split(":")
        at = time(int(hours), int(minutes))
    except ValueError as exc:
        raise ValueError(f"bad schedule time {clock!r}") from exc
    return Schedule(at=at, tz=ingest.parse_utc_offset(offset))


def next_fire(now: datetime, sched: Schedule) -> datetime:
    """The next instant the schedule fires, strictly after ``now``."""
    local = now.astimezone(sched.tz)
    candidate = local.replace(hour=sched.at.hour, minute=sched.at.minute, second=0, microsecond=0)
    if candidate <= local:
        candidate += timedelta(days=1)
    return candidate


def post_file_for(data_dir: Path, day: date) -> Path:
    return Path(data_dir) / f"posts-{day.isoformat()}.jsonl"


def covid_file_for(data_dir: Path, day: date) -> Path:
    return Path(data_dir) / f"covid-{day.isoformat()}.json"


def run_daily_job(
    now: datetime,
    store: MoodStore,
    data_dir: Path,
    lexicon: emotions.Lexicon,
    boundaries: geo.BoundarySet,
    cfg: Optional[ingest.IngestConfig] = None,
    tz: timezone = ingest.IST,
) -> dict:
    """Refresh the previous day (relative to ``now`` in ``tz``) from files.

    Returns a job report dict with status ok / skipped / failed.  A failed
    run writes nothing.
    """
    day = now.astimezone(tz).date() - timedelta(days=1)
    report = {"day": day.isoformat()}
    if store.has_day(day):
        report.update(status="skipped", reason="up-to-date")
        return report
    posts_path = post_file_for(data_dir, day)
    covid_path = covid_file_for(data_dir, day)
    if not posts_path.is_file() or not covid_path.is_file():
        missing = [str(p) for p in (posts_path, covid_path) if not p.is_file()]
        report.update(status="failed", reason=f"missing input files: {', '.join(missing)}")
        return report
    try:
        result = pipeline.run(posts_path, covid_path, lexicon, boundaries, cfg)
        day_aggs = [a for a in result.aggregates if a.date == day]
        day_covid = [c for c in result.covid if c.date == day]
        receipt = store.upsert_day(day_aggs, day_covid)
    except Exception as exc:  # propagate nothing; store is untouched on failure
        logger.exception("daily job failed for %s", day)
        report.update(status="failed", reason=str(exc))
        return report
    store.set_meta("last_job_day", day.isoformat())
    report.update(
        status="ok",
        receipt=receipt,
        posts=result.ingest_stats.emitted,
        skipped_malformed=result.ingest_stats.skipped_malformed,
    )
    return report


class DailyScheduler(threading.Thread):
    """Fires the daily job at the scheduled wall-clock time until stopped."""

    def __init__(self, store: MoodStore, data_dir: Path, lexicon, boundaries,
                 sched: Schedule, cfg: Optional[ingest.IngestConfig] = None):
        super().__init__(daemon=True, name="moodmap-daily-job")
        self.store = store
        self.data_dir = Path(data_dir)
        self.lexicon = lexicon
        self.boundaries = boundaries
        self.sched = sched
        self.cfg = cfg
        self._stop_event = threading.Event()

    def stop(self) -> None:
        self._stop_event.set()

    def run(self) -> None:
        while not self._stop_event.is_set():
            now = datetime.now(timezone.utc)
            wait = (next_fire(now, self.sched) - now).total_seconds()
            logger.info("daily job scheduled in %.0f s (at %s)", wait, self.sched)
            if self._stop_event.wait(timeout=wait):
                return
            report = run_daily_job(
                datetime.now(timezone.utc), self.store, self.data_dir,
                self.lexicon, self.boundaries, self.cfg,
            )
            logger.info("daily job: %s", report)
