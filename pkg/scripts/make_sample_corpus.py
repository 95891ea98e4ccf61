#!/usr/bin/env python3
"""Regenerate the bundled synthetic desk-run corpus under sample_data/.

Emits a 5,000-post line-delimited JSON corpus spanning a week, geotagged
around per-state anchor points (with a slice of city-center and no-geo
posts), plus a matching per-state daily case file.  Everything is seeded, so
the output is stable; the files are committed and replayed by the demo and
the end-to-end tests.

Run from the repo root:  python3 scripts/make_sample_corpus.py
"""

from __future__ import annotations

import json
import random
import sys
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from moodmap import emotions, geo  # noqa: E402

SEED = 20200428
N_POSTS = 5000
DAYS = [date(2020, 4, 28) + timedelta(days=i) for i in range(7)]
IST = timezone(timedelta(hours=5, minutes=30))

TRACKED = ["CoronaVirus", "Covid", "Lockdown", "IndiaFightCorona", "Covid-19"]
EXTRA_TAGS = ["StayHome", "StaySafe", "Unlock", "Quarantine", "WFH"]

# Neutral filler vocabulary; the generator asserts none of it is in the lexicon.
FILLERS = """
lockdown india today day people government news cases update stay home work
time week morning evening city state country everyone please watch read share
mask wash hands social distance essential services open closed market food
supply doctor hospital report number total new test testing vaccine virus
corona covid spread curve zone district police travel train flight border
migrant worker help line water power school college exam online class office
shop street neighbour family kitchen cooking recipe garden balcony window
phone call video meeting minister press briefing announcement rule guideline
""".split()

# Post volume weight and a geotag anchor per state (capital-ish point).
STATES = {
    "DL": (20, (28.61, 77.21)), "CH": (4, (30.73, 76.78)), "TG": (8, (17.39, 78.49)),
    "TN": (8, (13.08, 80.27)), "PB": (6, (30.90, 75.86)), "GA": (2, (15.49, 73.83)),
    "MH": (10, (19.08, 72.88)), "WB": (6, (22.57, 88.36)), "UP": (8, (26.85, 80.95)),
    "BR": (4, (25.59, 85.14)), "KA": (6, (12.97, 77.59)), "GJ": (4, (23.02, 72.57)),
    "RJ": (4, (26.91, 75.79)), "KL": (3, (8.52, 76.94)), "HR": (3, (29.06, 76.09)),
    "AP": (3, (16.51, 80.65)), "CT": (2, (21.25, 81.63)), "JH": (2, (23.34, 85.31)),
    "OR": (2, (20.30, 85.82)), "AS": (2, (26.14, 91.79)), "MP": (2, (23.26, 77.41)),
    "PY": (1, (11.93, 79.81)), "TR": (1, (23.83, 91.28)), "ML": (1, (25.58, 91.89)),
    "MN": (1, (24.82, 93.94)), "NL": (1, (25.67, 94.11)), "AR": (1, (27.08, 93.61)),
    "SK": (1, (27.33, 88.61)), "HP": (1, (31.10, 77.17)), "AN": (1, (11.62, 92.73)),
    "DN": (1, (20.27, 73.02)), "DD": (1, (20.42, 72.85)), "MZ": (1, (23.73, 92.72)),
}

EMOTION_WEIGHTS = [
    ("Neutral", 35), ("Happiness", 28), ("Sadness", 17), ("Surprise", 10),
    ("Anger", 5), ("Fear", 3), ("Disgust", 2),
]

COVID_BASE = {
    "MH": 260, "GJ": 110, "DL": 90, "MP": 55, "RJ": 55, "TN": 65, "UP": 50,
    "AP": 30, "TG": 20, "WB": 25, "PB": 22, "KA": 12, "KL": 9, "BR": 10,
    "HR": 9, "OR": 3, "JH": 2, "CH": 2, "AS": 1, "HP": 1, "CT": 1, "AN": 1,
    "ML": 1, "TR": 1, "GA": 1, "PY": 1, "MN": 1, "MZ": 1, "NL": 1, "SK": 1,
    "AR": 1, "DN": 1, "DD": 1,
}


def pick_weighted(rng: random.Random, pairs):
    total = sum(w for _, w in pairs)
    roll = rng.uniform(0, total)
    acc = 0.0
    for value, w in pairs:
        acc += w
        if roll <= acc:
            return value
    return pairs[-1][0]


def make_text(rng: random.Random, emotion: str, words_by_emotion: dict) -> str:
    parts = rng.sample(FILLERS, rng.randint(3, 7))
    if emotion != "Neutral":
        keywords = rng.sample(words_by_emotion[emotion], rng.randint(1, 3))
        for kw in keywords:
            parts.insert(rng.randrange(len(parts) + 1), kw)
    text = " ".join(parts)
    if rng.random() < 0.3:
        text += f" #{rng.choice(TRACKED + EXTRA_TAGS)}"
    if rng.random() < 0.15:
        text += f" @user{rng.randint(1, 999)}"
    if rng.random() < 0.15:
        text += f" https://t.co/{rng.randint(1000, 9999)}"
    return text


def main() -> int:
    rng = random.Random(SEED)
    lex = emotions.load_default_lexicon()
    boundaries = geo.load_default_boundaries()
    bad = [w for w in FILLERS if w in lex.entries]
    if bad:
        print(f"FAIL: filler words are lexicon keywords: {bad}")
        return 1

    words_by_emotion: dict[str, list] = {}
    for word, emotion in sorted(lex.entries.items()):
        words_by_emotion.setdefault(emotion, []).append(word)

    state_pairs = [(code, w) for code, (w, _) in sorted(STATES.items())]
    city_centers = [(r.code, c) for r, (c, _radius) in sorted(
        boundaries.cities.items(), key=lambda kv: kv[0].code)]

    out_dir = Path(__file__).resolve().parents[1] / "sample_data"
    out_dir.mkdir(exist_ok=True)
    posts_path = out_dir / "posts.jsonl"
    n_nogeo = n_city = 0
    with posts_path.open("w", encoding="utf-8") as fh:
        for i in range(N_POSTS):
            day = rng.choice(DAYS)
            created = datetime(day.year, day.month, day.day,
                               rng.randint(0, 23), rng.randint(0, 59), rng.randint(0, 59),
                               tzinfo=IST)
            emotion = pick_weighted(rng, EMOTION_WEIGHTS)
            text = make_text(rng, emotion, words_by_emotion)
            roll = rng.random()
            lat = lon = None
            if roll < 0.03:
                n_nogeo += 1  # no geotag: counts toward the nation only
            elif roll < 0.13:
                _name, center = rng.choice(city_centers)
                lat, lon = round(center.lat + rng.uniform(-0.05, 0.05), 4), \
                    round(center.lon + rng.uniform(-0.05, 0.05), 4)
                n_city += 1
            else:
                code = pick_weighted(rng, state_pairs)
                base = STATES[code][1]
                for _attempt in range(8):
                    lat = round(base[0] + rng.uniform(-0.35, 0.35), 4)
                    lon = round(base[1] + rng.uniform(-0.35, 0.35), 4)
                    if geo.resolve_state(geo.GeoPoint(lat, lon), boundaries) is not None:
                        break
                else:
                    lat, lon = base
            tags = [rng.choice(TRACKED)]
            if rng.random() < 0.25:
                tags.append(rng.choice(EXTRA_TAGS))
            record = {
                "id": f"p{i:06d}",
                "created_at": created.isoformat(),
                "text": text,
                "hashtags": tags,
            }
            if lat is not None:
                record["lat"], record["lon"] = lat, lon
            fh.write(json.dumps(record) + "\n")

    records = []
    for day in DAYS:
        for code in sorted(COVID_BASE):
            base = COVID_BASE[code]
            confirmed = max(0, int(base * rng.uniform(0.6, 1.5)))
            recovered = max(0, int(confirmed * rng.uniform(0.2, 0.7)))
            deceased = max(0, int(confirmed * rng.uniform(0.0, 0.06)))
            records.append({
                "date": day.isoformat(), "state_code": code,
                "confirmed": confirmed, "recovered": recovered, "deceased": deceased,
            })
    covid_path = out_dir / "covid.json"
    covid_path.write_text(json.dumps({"records": records}, indent=1), encoding="utf-8")
    print(f"wrote {N_POSTS} posts ({n_nogeo} no-geo, {n_city} city-tagged) -> {posts_path}")
    print(f"wrote {len(records)} case records -> {covid_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
