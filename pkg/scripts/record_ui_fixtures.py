#!/usr/bin/env python3
"""Record live API responses as portal contract-test fixtures.

Replays the bundled sample corpus into a throwaway store, serves it through
the real app, and saves selected endpoint payloads under
frontend/tests/fixtures/.  The portal tests byte-compare what the UI renders
against these files.

Run from the repo root:  python3 scripts/record_ui_fixtures.py
"""

from __future__ import annotations

import json
import sys
import tempfile
from datetime import date
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from moodmap import api, emotions, geo, pipeline  # noqa: E402
from moodmap.aggregate import TriggerEvent  # noqa: E402
from moodmap.store import MoodStore  # noqa: E402

FIXTURES = {
    "nation.json": "/api/nation",
    "nation_3day.json": "/api/nation?from=2020-04-28&to=2020-04-30",
    "state_PB.json": "/api/state/PB?from=2020-04-28&to=2020-05-04",
    "city_Chennai.json": "/api/city/Chennai?from=2020-04-28&to=2020-05-04",
    "snapshot_2020-04-28.json": "/api/snapshot/2020-04-28",
    "snapshot_2020-04-29.json": "/api/snapshot/2020-04-29",
    "snapshot_2020-04-30.json": "/api/snapshot/2020-04-30",
    "snapshot_2020-05-01.json": "/api/snapshot/2020-05-01",
    "snapshot_2020-05-04.json": "/api/snapshot/2020-05-04",
    "nation_empty.json": "/api/nation?from=2020-04-27&to=2020-04-27",
    "events.json": "/api/events",
    "cities.json": "/api/cities",
    "boundaries.json": "/api/boundaries",
    "report_PB.json": "/api/report?region=PB&from=2020-04-28&to=2020-05-04",
}


def main() -> int:
    out_dir = REPO / "frontend" / "tests" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)

    lexicon = emotions.load_default_lexicon()
    boundaries = geo.load_default_boundaries()
    with tempfile.TemporaryDirectory() as tmp:
        store = MoodStore(Path(tmp) / "fixtures.db")
        result = pipeline.run(
            REPO / "sample_data" / "posts.jsonl",
            REPO / "sample_data" / "covid.json",
            lexicon, boundaries,
        )
        store.upsert_day(result.aggregates, result.covid)
        store.set_events([TriggerEvent("Extension of Lockdown by 2 Weeks", date(2020, 5, 1))])

        client = TestClient(api.create_app(store))
        for name, path in FIXTURES.items():
            resp = client.get(path)
            resp.raise_for_status()
            (out_dir / name).write_text(json.dumps(resp.json(), indent=1), encoding="utf-8")
            print(f"recorded {path} -> {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
