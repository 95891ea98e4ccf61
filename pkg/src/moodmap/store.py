"""Embedded persistence for mood aggregates, case counts, and trigger events.

A single SQLite file behind a small interface: many concurrent readers (one
short-lived connection per call), writes serialized through a lock and
committed atomically per batch.  Responses are pure functions of the stored
rows; re-upserting identical data is a no-op.
"""

from __future__ import annotations

import csv
import logging
import sqlite3
import threading
from datetime import date
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from . import aggregate as agg_mod
from .aggregate import RegionDayAggregate, TriggerEvent
from .emotions import ALL_LABELS
from .geo import NATION_CODE, REQUIRED_STATE_CODES, RegionId
from .ingest import CovidDailyStats

logger = logging.getLogger(__name__)

_EMOTION_COLS = {
    "Anger": "anger",
    "Disgust": "disgust",
    "Fear": "fear",
    "Happiness": "happiness",
    "Sadness": "sadness",
    "Surprise": "surprise",
    "Neutral": "neutral",
}

_SCHEMA = """
CREATE TABLE IF NOT EXISTS aggregates (
    kind TEXT NOT NULL,
    code TEXT NOT NULL,
    day TEXT NOT NULL,
    anger INTEGER NOT NULL, disgust INTEGER NOT NULL, fear INTEGER NOT NULL,
    happiness INTEGER NOT NULL, sadness INTEGER NOT NULL, surprise INTEGER NOT NULL,
    neutral INTEGER NOT NULL, total INTEGER NOT NULL,
    PRIMARY KEY (kind, code, day)
);
CREATE TABLE IF NOT EXISTS covid (
    code TEXT NOT NULL,
    day TEXT NOT NULL,
    confirmed INTEGER NOT NULL, recovered INTEGER NOT NULL, deceased INTEGER NOT NULL,
    PRIMARY KEY (code, day)
);
CREATE TABLE IF NOT EXISTS events (
    name TEXT PRIMARY KEY,
    day TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
"""


def default_city_names() -> frozenset:
    text = resources.files("moodmap").joinpath("data/cities.csv").read_text(encoding="utf-8")
    return frozenset(row["city"].strip() for row in csv.DictReader(text.splitlines()))


class UnknownRegionError(KeyError):
    """Raised for region codes outside the covered set."""


class MoodStore:
    """Single-file store keyed by (region, day)."""

    def __init__(self, path: Union[str, Path], known_cities: Optional[Iterable[str]] = None):
        self.path = str(path)
        self._write_lock = threading.Lock()
        self.known_cities = frozenset(known_cities) if known_cities is not None else default_city_names()
        with self._connect() as conn:
            conn.executescript(_SCHEMA)

    def _connect(self) -> sqlite3.Connection:
        conn = sqlite3.connect(self.path, timeout=30.0)
        conn.execute("PRAGMA journal_mode=WAL")
        return conn

    # -- validation ------------------------------------------------------

    def check_region(self, region: RegionId) -> RegionId:
        if region.kind == "nation" and region.code == NATION_CODE:
            return region
        if region.kind == "state" and region.code in REQUIRED_STATE_CODES:
            return region
        if region.kind == "city" and region.code in self.known_cities:
            return region
        raise UnknownRegionError(f"unknown region: {region.kind}:{region.code}")

    # -- writes ----------------------------------------------------------

    def upsert_day(
        self,
        aggs: Sequence[RegionDayAggregate],
        covid: Sequence[CovidDailyStats] = (),
    ) -> dict:
        """Atomically upsert aggregate and case rows.

        Every aggregate must satisfy the row-sum invariant and carry a date;
        any violation rejects the whole batch with nothing written.  The
        receipt reports inserted/updated/changed row counts.
        """
        for agg in aggs:
            agg.validate()
            if agg.date is None:
                raise ValueError(f"aggregate for {agg.region.code} has no date")
        receipt = {
            "inserted": 0, "updated": 0, "changed": 0,
            "covid_inserted": 0, "covid_updated": 0, "covid_changed": 0,
        }
        with self._write_lock:
            conn = self._connect()
            try:
                with conn:  # one transaction; rolls back on failure
                    for agg in aggs:
                        values = [agg.counts.get(e, 0) for e in ALL_LABELS] + [agg.total]
                        row = conn.execute(
                            "SELECT anger,disgust,fear,happiness,sadness,surprise,neutral,total "
                            "FROM aggregates WHERE kind=? AND code=? AND day=?",
                            (agg.region.kind, agg.region.code, agg.date.isoformat()),
                        ).fetchone()
                        if row is None:
                            receipt["inserted"] += 1
                        else:
                            receipt["updated"] += 1
                            if list(row) != values:
                                receipt["changed"] += 1
                        conn.execute(
                            "INSERT OR REPLACE INTO aggregates "
                            "(kind,code,day,anger,disgust,fear,happiness,sadness,surprise,neutral,total) "
                            "VALUES (?,?,?,?,?,?,?,?,?,?,?)",
                            [agg.region.kind, agg.region.code, agg.date.isoformat()] + values,
                        )
                    for rec in covid:
                        values = [rec.confirmed, rec.recovered, rec.deceased]
                        row = conn.execute(
                            "SELECT confirmed,recovered,deceased FROM covid WHERE code=? AND day=?",
                            (rec.region.code, rec.date.isoformat()),
                        ).fetchone()
                        if row is None:
                            receipt["covid_inserted"] += 1
                        else:
                            receipt["covid_updated"] += 1
                            if list(row) != values:
                                receipt["covid_changed"] += 1
                        conn.execute(
                            "INSERT OR REPLACE INTO covid (code,day,confirmed,recovered,deceased) "
                            "VALUES (?,?,?,?,?)",
                            [rec.region.code, rec.date.isoformat()] + values,
                        )
            finally:
                conn.close()
        return receipt

    def set_events(self, events: Sequence[TriggerEvent]) -> None:
        with self._write_lock:
            conn = self._connect()
            try:
                with conn:
                    conn.execute("DELETE FROM events")
                    conn.executemany(
                        "INSERT INTO events (name, day) VALUES (?, ?)",
                        [(e.name, e.date.isoformat()) for e in events],
                    )
            finally:
                conn.close()

    def set_meta(self, key: str, value: str) -> None:
        with self._write_lock:
            conn = self._connect()
            try:
                with conn:
                    conn.execute("INSERT OR REPLACE INTO meta (key, value) VALUES (?, ?)", (key, value))
            finally:
                conn.close()

    # -- reads -----------------------------------------------------------

    def get_meta(self, key: str) -> Optional[str]:
        conn = self._connect()
        try:
            row = conn.execute("SELECT value FROM meta WHERE key=?", (key,)).fetchone()
            return row[0] if row else None
        finally:
            conn.close()

    def get_events(self) -> list:
        conn = self._connect()
        try:
            rows = conn.execute("SELECT name, day FROM events ORDER BY day, name").fetchall()
            return [TriggerEvent(name=r[0], date=date.fromisoformat(r[1])) for r in rows]
        finally:
            conn.close()

    def data_range(self) -> Optional[tuple]:
        """(earliest, latest) day with any aggregate, or None when empty."""
        conn = self._connect()
        try:
            row = conn.execute("SELECT MIN(day), MAX(day) FROM aggregates").fetchone()
        finally:
            conn.close()
        if not row or row[0] is None:
            return None
        return date.fromisoformat(row[0]), date.fromisoformat(row[1])

    def has_day(self, day: date) -> bool:
        conn = self._connect()
        try:
            row = conn.execute("SELECT 1 FROM aggregates WHERE day=? LIMIT 1", (day.isoformat(),)).fetchone()
            return row is not None
        finally:
            conn.close()

    def aggregates_for(self, region: RegionId, start: date, end: date) -> list:
        conn = self._connect()
        try:
            rows = conn.execute(
                "SELECT day,anger,disgust,fear,happiness,sadness,surprise,neutral "
                "FROM aggregates WHERE kind=? AND code=? AND day>=? AND day<=? ORDER BY day",
                (region.kind, region.code, start.isoformat(), end.isoformat()),
            ).fetchall()
        finally:
            conn.close()
        out = []
        for row in rows:
            counts = dict(zip(ALL_LABELS, row[1:]))
            out.append(RegionDayAggregate.from_counts(region, date.fromisoformat(row[0]), counts))
        return out

    def covid_for(self, region: RegionId, start: date, end: date) -> list:
        if region.kind == "city":
            return []  # case counts are tracked per state and nation only
        conn = self._connect()
        try:
            rows = conn.execute(
                "SELECT day,confirmed,recovered,deceased FROM covid "
                "WHERE code=? AND day>=? AND day<=? ORDER BY day",
                (region.code, start.isoformat(), end.isoformat()),
            ).fetchall()
        finally:
            conn.close()
        return [
            CovidDailyStats(region, date.fromisoformat(r[0]), r[1], r[2], r[3])
            for r in rows
        ]

    def query(self, region: RegionId, start: date, end: date) -> dict:
        """Trend series, range summary, case totals, and post total for a region."""
        self.check_region(region)
        if start > end:
            raise ValueError(f"invalid range: {start} > {end}")
        aggs = self.aggregates_for(region, start, end)
        series = agg_mod.trend_series(aggs, region, start, end)
        summary = agg_mod.mood_summary(agg_mod.range_aggregate(region, aggs))
        covid = self.covid_for(region, start, end)
        covid_totals = {
            "confirmed": sum(c.confirmed for c in covid),
            "recovered": sum(c.recovered for c in covid),
            "deceased": sum(c.deceased for c in covid),
        }
        return {
            "series": series,
            "summary": summary,
            "covid": covid,
            "covid_totals": covid_totals,
            "total_posts": series.total_posts,
        }

    def snapshot(self, day: date) -> dict:
        """Per-state top-two pins and confirmed-case intensity for one day.

        Always returns all covered states; absent data yields empty pins and
        zero intensity.  Intensity is confirmed count scaled by the day's
        maximum, so ordering matches confirmed-count ordering.
        """
        conn = self._connect()
        try:
            agg_rows = conn.execute(
                "SELECT code,anger,disgust,fear,happiness,sadness,surprise,neutral "
                "FROM aggregates WHERE kind='state' AND day=?",
                (day.isoformat(),),
            ).fetchall()
            covid_rows = conn.execute(
                "SELECT code,confirmed FROM covid WHERE day=? AND code!=?",
                (day.isoformat(), NATION_CODE),
            ).fetchall()
        finally:
            conn.close()
        counts_by_code = {r[0]: dict(zip(ALL_LABELS, r[1:])) for r in agg_rows}
        confirmed_by_code = {r[0]: r[1] for r in covid_rows}
        max_confirmed = max(confirmed_by_code.values(), default=0)
        states = {}
        for code in sorted(REQUIRED_STATE_CODES):
            counts = counts_by_code.get(code, agg_mod.zero_counts())
            confirmed = confirmed_by_code.get(code, 0)
            states[code] = {
                "top_two": list(agg_mod.top_two(counts)),
                "total": sum(counts.values()),
                "confirmed": confirmed,
                "intensity": (confirmed / max_confirmed) if max_confirmed else 0.0,
            }
        return {"date": day.isoformat(), "states": states}
