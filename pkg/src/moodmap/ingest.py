"""File-based corpus replay: posts and daily case data.

Posts arrive as line-delimited JSON and are filtered to tracked hashtags with
a per-day cap; case data arrives as a single JSON document of per-state daily
changes.  Both readers are tolerant of bad records (skip and count) but fatal
on unreadable or structurally broken sources.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from typing import Iterator, Optional, TextIO, Union

from .geo import GeoPoint, RegionId, REQUIRED_STATE_CODES, NATION

logger = logging.getLogger(__name__)

IST = timezone(timedelta(hours=5, minutes=30))

DEFAULT_HASHTAGS = ("CoronaVirus", "Covid-19", "IndiaFightCorona", "Covid", "Lockdown")
DEFAULT_DAILY_CAP = 10_000


class CovidDataError(ValueError):
    """Raised when a case-data file is structurally unusable."""


def normalize_hashtag(tag: str) -> str:
    """Lowercase, strip the '#' sigil and internal whitespace."""
    return "".join(tag.lstrip("#").split()).lower()


def parse_utc_offset(text: str) -> timezone:
    """Parse a fixed offset like '+05:30' into a timezone."""
    text = text.strip()
    if not text or text[0] not in "+-" or len(text) != 6 or text[3] != ":":
        raise ValueError(f"bad UTC offset {text!r}, expected like '+05:30'")
    sign = 1 if text[0] == "+" else -1
    hours, minutes = int(text[1:3]), int(text[4:6])
    return timezone(sign * timedelta(hours=hours, minutes=minutes))


@dataclass(frozen=True)
class Post:
    id: str
    created_at: datetime
    text: str
    point: Optional[GeoPoint] = None
    hashtags: frozenset = frozenset()

    def day(self, tz: timezone = IST) -> date:
        return self.created_at.astimezone(tz).date()


@dataclass(frozen=True)
class CovidDailyStats:
    region: RegionId
    date: date
    confirmed: int
    recovered: int
    deceased: int


@dataclass
class IngestConfig:
    tracked_hashtags: frozenset = frozenset(normalize_hashtag(t) for t in DEFAULT_HASHTAGS)
    daily_cap: int = DEFAULT_DAILY_CAP
    day_boundary_tz: timezone = IST
    per_state_cap: Optional[int] = None  # enforced downstream, after geo resolution

    def __post_init__(self):
        if self.daily_cap <= 0:
            raise ValueError("daily_cap must be positive")
        self.tracked_hashtags = frozenset(normalize_hashtag(t) for t in self.tracked_hashtags)


@dataclass
class IngestStats:
    emitted: int = 0
    skipped_malformed: int = 0
    skipped_untracked: int = 0
    skipped_capped: int = 0
    skipped_duplicate: int = 0


def _parse_post(obj: dict) -> Post:
    post_id = obj["id"]
    if not isinstance(post_id, str) or not post_id:
        raise ValueError("post id must be a non-empty string")
    created = datetime.fromisoformat(str(obj["created_at"]).replace("Z", "+00:00"))
    if created.tzinfo is None:
        created = created.replace(tzinfo=timezone.utc)
    text = obj.get("text", "")
    if not isinstance(text, str):
        raise ValueError("post text must be a string")
    point = None
    if obj.get("lat") is not None and obj.get("lon") is not None:
        point = GeoPoint(float(obj["lat"]), float(obj["lon"]))
    tags = frozenset(normalize_hashtag(str(t)) for t in obj.get("hashtags", []))
    return Post(id=post_id, created_at=created, text=text, point=point, hashtags=tags)


def ingest_posts(
    source: Union[str, Path, TextIO],
    cfg: Optional[IngestConfig] = None,
    stats: Optional[IngestStats] = None,
) -> Iterator[Post]:
    """Stream posts from a line-delimited JSON file, in file order.

    Emits only posts carrying at least one tracked hashtag, at most
    ``daily_cap`` per calendar day (in the configured day-boundary zone).
    Malformed lines and duplicate ids are skipped and counted in ``stats``;
    an unreadable source raises OSError.
    """
    cfg = cfg or IngestConfig()
    stats = stats if stats is not None else IngestStats()
    if isinstance(source, (str, Path)):
        fh: TextIO = open(source, "r", encoding="utf-8")
        owned = True
    else:
        fh, owned = source, False
    per_day: dict[date, int] = {}
    seen_ids: set[str] = set()
    try:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                post = _parse_post(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                stats.skipped_malformed += 1
                logger.debug("skipping malformed post line %d: %s", lineno, exc)
                continue
            if post.id in seen_ids:
                stats.skipped_duplicate += 1
                continue
            seen_ids.add(post.id)
            if not (post.hashtags & cfg.tracked_hashtags):
                stats.skipped_untracked += 1
                continue
            day = post.day(cfg.day_boundary_tz)
            if per_day.get(day, 0) >= cfg.daily_cap:
                stats.skipped_capped += 1
                continue
            per_day[day] = per_day.get(day, 0) + 1
            stats.emitted += 1
            yield post
    finally:
        if owned:
            fh.close()


def ingest_covid_stats(source: Union[str, Path, bytes, TextIO]) -> list:
    """Load per-state daily case records plus computed national records.

    The file is JSON ``{"records": [{"date", "state_code", "confirmed",
    "recovered", "deceased"}, ...]}``.  Records with negative counts, unknown
    state codes, or a repeated (state, date) key are rejected with a
    diagnostic; a structurally broken file raises CovidDataError.
    """
    if isinstance(source, (str, Path)):
        raw = Path(source).read_text(encoding="utf-8")
    elif isinstance(source, bytes):
        raw = source.decode("utf-8")
    else:
        raw = source.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CovidDataError(f"malformed case-data JSON: {exc}") from exc
    records = doc.get("records")
    if not isinstance(records, list):
        raise CovidDataError("case-data file must contain a 'records' list")

    out: dict[tuple, CovidDailyStats] = {}
    national: dict[date, list] = {}
    rejected = 0
    for idx, rec in enumerate(records):
        try:
            day = date.fromisoformat(rec["date"])
            code = str(rec["state_code"]).upper()
            confirmed = int(rec["confirmed"])
            recovered = int(rec["recovered"])
            deceased = int(rec["deceased"])
        except (KeyError, TypeError, ValueError) as exc:
            rejected += 1
            logger.warning("rejecting case record %d: %s", idx, exc)
            continue
        if min(confirmed, recovered, deceased) < 0:
            rejected += 1
            logger.warning("rejecting case record %d: negative count", idx)
            continue
        if code not in REQUIRED_STATE_CODES:
            rejected += 1
            logger.warning("rejecting case record %d: unknown state code %r", idx, code)
            continue
        key = (code, day)
        if key in out:
            rejected += 1
            logger.warning("rejecting case record %d: duplicate for %s %s", idx, code, day)
            continue
        out[key] = CovidDailyStats(RegionId("state", code), day, confirmed, recovered, deceased)
        totals = national.setdefault(day, [0, 0, 0])
        totals[0] += confirmed
        totals[1] += recovered
        totals[2] += deceased
    if rejected:
        logger.warning("case data: %d records rejected", rejected)
    result = list(out.values())
    for day in sorted(national):
        c, r, d = national[day]
        result.append(CovidDailyStats(NATION, day, c, r, d))
    return result
