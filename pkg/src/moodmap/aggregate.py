"""Daily mood rollups: per-region emotion counts, top-two summaries,
range trends, and report documents joining mood with case counts.

Aggregation is a fold over labeled posts; partial aggregates merge
associatively, and a national row is always derived as the sum of the state
rows (posts with no resolvable state count toward the nation only).
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Iterable, Mapping, Optional, Sequence

from .emotions import ALL_LABELS, CODES, EMOTIONS, NEUTRAL
from .geo import NATION, RegionId
from .ingest import IST, CovidDailyStats

logger = logging.getLogger(__name__)

# Tie-break order for top-two summaries: canonical order, Neutral last.
_SUMMARY_ORDER = {e: i for i, e in enumerate(EMOTIONS + (NEUTRAL,))}

# Column order for CSV exports.
_CSV_LABELS = ("Anger", "Disgust", "Fear", "Happiness", "Sadness", "Surprise", "Neutral")


def zero_counts() -> dict:
    return {e: 0 for e in ALL_LABELS}


@dataclass(frozen=True)
class RegionDayAggregate:
    """Seven-way emotion counts for one region, one day (or a range sum)."""

    region: RegionId
    date: Optional[date]
    counts: Mapping[str, int]
    total: int

    @classmethod
    def from_counts(cls, region: RegionId, day: Optional[date], counts: Mapping[str, int]):
        full = zero_counts()
        full.update({k: int(v) for k, v in counts.items()})
        return cls(region=region, date=day, counts=full, total=sum(full.values()))

    def validate(self) -> None:
        unknown = set(self.counts) - set(ALL_LABELS)
        if unknown:
            raise ValueError(f"unknown emotion labels: {sorted(unknown)}")
        if any(v < 0 for v in self.counts.values()):
            raise ValueError("negative emotion count")
        if self.total != sum(self.counts.get(e, 0) for e in ALL_LABELS):
            raise ValueError(
                f"total {self.total} != sum of counts {sum(self.counts.values())} "
                f"for {self.region.code} {self.date}"
            )


@dataclass(frozen=True)
class MoodSummary:
    region: RegionId
    top_two: tuple
    percentages: Mapping[str, float]
    total: int


@dataclass(frozen=True)
class TrendSeries:
    region: RegionId
    start: date
    end: date
    points: tuple  # of (date, counts mapping)
    total_posts: int


@dataclass(frozen=True)
class TriggerEvent:
    name: str
    date: date


def aggregate_day(labeled: Iterable[tuple], day: date) -> list:
    """Fold (post, label, region) triples for one calendar day.

    Returns one aggregate per region seen plus a national aggregate that sums
    the state rows; triples whose region is None (unresolvable coordinates)
    count toward the nation only.  Triples dated outside ``day`` (IST) are
    rejected with a diagnostic.
    """
    by_region: dict[RegionId, dict] = {}
    nation = zero_counts()
    accepted = 0
    rejected = 0
    for post, label, region in labeled:
        if post.day(IST) != day:
            rejected += 1
            continue
        accepted += 1
        if region is None:
            nation[label] += 1
            continue
        counts = by_region.setdefault(region, zero_counts())
        counts[label] += 1
        if region.kind == "state":
            nation[label] += 1
    if rejected:
        logger.warning("aggregate_day(%s): rejected %d posts dated outside the day", day, rejected)
    if accepted == 0:
        return []
    out = [RegionDayAggregate.from_counts(region, day, counts) for region, counts in by_region.items()]
    out.append(RegionDayAggregate.from_counts(NATION, day, nation))
    return out


def merge_counts(aggs: Iterable[RegionDayAggregate]) -> dict:
    """Element-wise sum of aggregate counts (associative and commutative)."""
    total = zero_counts()
    for agg in aggs:
        for e in ALL_LABELS:
            total[e] += agg.counts.get(e, 0)
    return total


def range_aggregate(region: RegionId, aggs: Iterable[RegionDayAggregate]) -> RegionDayAggregate:
    """Sum aggregates into a single range row for ``region`` (date=None)."""
    return RegionDayAggregate.from_counts(region, None, merge_counts(aggs))


def percentages(counts: Mapping[str, int]) -> dict:
    total = sum(counts.get(e, 0) for e in ALL_LABELS)
    if total <= 0:
        return {e: 0.0 for e in ALL_LABELS}
    return {e: counts.get(e, 0) / total for e in ALL_LABELS}


def top_two(counts: Mapping[str, int]) -> tuple:
    """The at-most-two emotions with the largest positive counts.

    Ties break in canonical order with Neutral last.
    """
    present = [e for e in ALL_LABELS if counts.get(e, 0) > 0]
    present.sort(key=lambda e: (-counts[e], _SUMMARY_ORDER[e]))
    return tuple(present[:2])


def mood_summary(agg: RegionDayAggregate) -> MoodSummary:
    """Top-two emotions and the per-emotion shares for one aggregate."""
    return MoodSummary(
        region=agg.region,
        top_two=top_two(agg.counts),
        percentages=percentages(agg.counts),
        total=agg.total,
    )


def days_in_range(start: date, end: date) -> list:
    if start > end:
        raise ValueError(f"invalid range: {start} > {end}")
    return [start + timedelta(days=i) for i in range((end - start).days + 1)]


def trend_series(
    aggs: Iterable[RegionDayAggregate],
    region: RegionId,
    start: date,
    end: date,
) -> TrendSeries:
    """Per-day counts for ``region`` across [start, end], zero-filling gaps."""
    wanted = {}
    for agg in aggs:
        if agg.region == region and agg.date is not None and start <= agg.date <= end:
            if agg.date in wanted:
                wanted[agg.date] = {e: wanted[agg.date][e] + agg.counts.get(e, 0) for e in ALL_LABELS}
            else:
                wanted[agg.date] = {e: agg.counts.get(e, 0) for e in ALL_LABELS}
    points = []
    total = 0
    for day in days_in_range(start, end):
        counts = wanted.get(day, zero_counts())
        total += sum(counts.values())
        points.append((day, counts))
    return TrendSeries(region=region, start=start, end=end, points=tuple(points), total_posts=total)


def _covid_for(covid: Iterable[CovidDailyStats], region: RegionId, day: date) -> dict:
    for rec in covid:
        if rec.region == region and rec.date == day:
            return {"confirmed": rec.confirmed, "recovered": rec.recovered, "deceased": rec.deceased}
    return {"confirmed": 0, "recovered": 0, "deceased": 0}


def build_report(
    region: RegionId,
    start: date,
    end: date,
    aggs: Iterable[RegionDayAggregate],
    covid: Iterable[CovidDailyStats],
) -> dict:
    """Assemble the range report document: per-day mood + case counts, plus
    range totals.  Regions with no data produce zeroed days, not errors."""
    aggs = list(aggs)
    covid = list(covid)
    series = trend_series(aggs, region, start, end)
    days = []
    covid_totals = {"confirmed": 0, "recovered": 0, "deceased": 0}
    for day, counts in series.points:
        day_covid = _covid_for(covid, region, day)
        for k in covid_totals:
            covid_totals[k] += day_covid[k]
        total = sum(counts.values())
        days.append({
            "date": day.isoformat(),
            "counts": dict(counts),
            "total": total,
            "top_two": list(top_two(counts)),
            "percentages": percentages(counts),
            "covid": day_covid,
        })
    range_counts = merge_counts(
        RegionDayAggregate.from_counts(region, day, counts) for day, counts in series.points
    )
    return {
        "region": {"kind": region.kind, "code": region.code},
        "from": start.isoformat(),
        "to": end.isoformat(),
        "days": days,
        "range": {
            "counts": range_counts,
            "total": sum(range_counts.values()),
            "top_two": list(top_two(range_counts)),
            "percentages": percentages(range_counts),
            "covid": covid_totals,
        },
    }


def export_csv(aggs: Sequence[RegionDayAggregate], fh) -> None:
    """Write aggregates as CSV with columns region,date,A,D,F,H,SA,S,N,total."""
    writer = csv.writer(fh)
    writer.writerow(["region", "date"] + [CODES[e] for e in _CSV_LABELS] + ["total"])
    for agg in aggs:
        writer.writerow(
            [agg.region.code, agg.date.isoformat() if agg.date else ""]
            + [agg.counts.get(e, 0) for e in _CSV_LABELS]
            + [agg.total]
        )
