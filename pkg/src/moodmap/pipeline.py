"""End-to-end offline pipeline: replay posts, classify, resolve, aggregate.

Produces per-day aggregates for every region seen (states, cities, nation)
plus the parsed case records, ready for a store upsert.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from . import aggregate as agg_mod
from . import emotions, geo, ingest

logger = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    aggregates: list = field(default_factory=list)  # RegionDayAggregate, all days
    covid: list = field(default_factory=list)  # CovidDailyStats
    ingest_stats: ingest.IngestStats = field(default_factory=ingest.IngestStats)
    emotion_totals: dict = field(default_factory=agg_mod.zero_counts)
    days: list = field(default_factory=list)
    skipped_state_cap: int = 0


def run(
    post_source: Union[str, Path],
    covid_source: Union[str, Path, None],
    lexicon: emotions.Lexicon,
    boundaries: geo.BoundarySet,
    cfg: Optional[ingest.IngestConfig] = None,
) -> PipelineResult:
    """Replay a post file (and optional case file) through the full pipeline."""
    cfg = cfg or ingest.IngestConfig()
    result = PipelineResult()
    labeled_by_day: dict = {}
    state_day_counts: dict = {}
    for post in ingest.ingest_posts(post_source, cfg, stats=result.ingest_stats):
        label, _scores = emotions.classify(post.text, lexicon)
        state = geo.resolve_state(post.point, boundaries) if post.point else None
        day = post.day(cfg.day_boundary_tz)
        if cfg.per_state_cap is not None and state is not None:
            key = (day, state.code)
            if state_day_counts.get(key, 0) >= cfg.per_state_cap:
                result.skipped_state_cap += 1
                continue
            state_day_counts[key] = state_day_counts.get(key, 0) + 1
        triples = labeled_by_day.setdefault(day, [])
        triples.append((post, label, state))
        if post.point is not None:
            city = geo.resolve_city(post.point, boundaries)
            if city is not None:
                triples.append((post, label, city))
        result.emotion_totals[label] += 1
    if result.skipped_state_cap:
        logger.warning("per-state cap dropped %d posts", result.skipped_state_cap)
    for day in sorted(labeled_by_day):
        result.aggregates.extend(agg_mod.aggregate_day(labeled_by_day[day], day))
        result.days.append(day)
    if covid_source is not None:
        result.covid = ingest.ingest_covid_stats(covid_source)
    return result
