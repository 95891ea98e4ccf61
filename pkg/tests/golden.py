"""Golden fixtures shared across the test suite.

STATE_RANGE holds the per-state seven-way emotion counts and case totals for
the reference Mar 14 - May 6 2020 range, used as frozen expected values.
Row order of the tuples: (A, D, H, S, F, SA, N, total, confirmed, recovered,
deceased) where A=Anger, D=Disgust, H=Happiness, S=Surprise, F=Fear,
SA=Sadness, N=Neutral.
"""

from __future__ import annotations

from datetime import date, timedelta

RANGE_START = date(2020, 3, 14)
RANGE_END = date(2020, 5, 6)

STATE_RANGE = {
    "BR": (169, 32, 1491, 464, 48, 1011, 1580, 4795, 528, 127, 4),
    "GA": (469, 52, 2955, 1017, 97, 2154, 3355, 10099, 7, 7, 0),
    "PB": (857, 122, 4825, 1680, 253, 3379, 5136, 16252, 1232, 128, 23),
    "UP": (392, 14, 2344, 607, 45, 1143, 2551, 7096, 2766, 802, 50),
    "CH": (1740, 177, 8826, 3439, 406, 6029, 12380, 32997, 116, 21, 1),
    "DN": (90, 0, 598, 170, 28, 354, 570, 1810, 0, 0, 0),
    "DD": (152, 8, 1002, 297, 37, 627, 1042, 3165, 0, 0, 0),
    "DL": (10284, 1087, 58617, 22053, 2450, 37439, 69640, 201570, 4898, 1431, 64),
    "RJ": (199, 12, 1150, 459, 53, 606, 1472, 3951, 3061, 1438, 77),
    "TN": (785, 89, 4826, 2084, 213, 2904, 5956, 16857, 3550, 1409, 31),
    "WB": (459, 37, 2621, 931, 124, 1624, 3219, 9015, 1259, 218, 133),
    "MH": (377, 41, 2209, 882, 103, 1300, 2797, 7709, 14541, 2465, 582),
    "TG": (974, 118, 4673, 1663, 194, 2443, 7004, 17069, 1085, 585, 29),
    "PY": (154, 25, 1024, 421, 39, 632, 1507, 3802, 9, 6, 0),
    "AP": (7, 2, 124, 27, 1, 40, 91, 292, 1650, 524, 33),
    "CT": (80, 2, 450, 142, 20, 287, 609, 1590, 44, 36, 0),
    "GJ": (36, 11, 318, 99, 14, 218, 418, 1114, 5804, 1195, 319),
    "KA": (25, 0, 100, 21, 22, 44, 122, 334, 651, 321, 27),
    "MN": (6, 6, 110, 23, 2, 119, 155, 421, 2, 2, 0),
    "HR": (304, 10, 2056, 642, 88, 995, 2584, 6679, 517, 253, 6),
    "JH": (46, 2, 439, 114, 27, 373, 489, 1490, 115, 27, 3),
    "AN": (41, 0, 151, 53, 2, 86, 180, 513, 33, 32, 0),
    "TR": (36, 12, 409, 129, 3, 168, 698, 1455, 29, 2, 0),
    "OR": (0, 0, 7, 4, 0, 7, 18, 36, 169, 60, 1),
    "ML": (4, 0, 86, 47, 12, 47, 83, 279, 12, 10, 1),
    "SK": (5, 0, 9, 5, 0, 6, 30, 55, 0, 0, 0),
    "AR": (0, 0, 12, 8, 0, 0, 6, 26, 1, 1, 0),
    "HP": (0, 0, 11, 0, 0, 1, 0, 12, 41, 35, 2),
    "NL": (3, 0, 67, 20, 0, 41, 48, 179, 0, 0, 0),
    "MP": (0, 2, 1, 0, 0, 0, 5, 8, 2942, 856, 166),
    "MZ": (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "KL": (48, 1, 462, 199, 39, 294, 745, 1788, 500, 462, 4),
    "AS": (9, 4, 208, 49, 5, 177, 279, 731, 43, 33, 1),
}

LEXICON_COUNTS = {
    "Anger": 355,
    "Disgust": 70,
    "Happiness": 553,
    "Surprise": 95,
    "Fear": 195,
    "Sadness": 274,
}


def counts_dict(code: str) -> dict:
    a, d, h, s, f, sa, n, _tot, *_ = STATE_RANGE[code]
    return {
        "Anger": a, "Disgust": d, "Happiness": h, "Surprise": s,
        "Fear": f, "Sadness": sa, "Neutral": n,
    }


def covid_totals(code: str) -> tuple:
    return STATE_RANGE[code][8:11]


def split_total(total: int, n_days: int) -> list:
    """Deterministically split a range total into n daily values that sum
    back exactly: the remainder spreads one unit over the first days."""
    base, rem = divmod(total, n_days)
    return [base + (1 if i < rem else 0) for i in range(n_days)]


def covid_fixture_records(start: date = RANGE_START, end: date = RANGE_END) -> list:
    """Per-day case records for every state whose range sums equal the
    golden totals exactly (split evenly by construction)."""
    days = [(start + timedelta(days=i)) for i in range((end - start).days + 1)]
    records = []
    for code in sorted(STATE_RANGE):
        con, rec, dec = covid_totals(code)
        con_days = split_total(con, len(days))
        rec_days = split_total(rec, len(days))
        dec_days = split_total(dec, len(days))
        for i, day in enumerate(days):
            records.append({
                "date": day.isoformat(),
                "state_code": code,
                "confirmed": con_days[i],
                "recovered": rec_days[i],
                "deceased": dec_days[i],
            })
    return records


def daily_aggregate_rows(code: str, start: date = RANGE_START, end: date = RANGE_END) -> list:
    """Split a state's golden range counts into per-day rows that sum back
    exactly; returns (day, counts dict) pairs."""
    days = [(start + timedelta(days=i)) for i in range((end - start).days + 1)]
    per_label = {label: split_total(count, len(days))
                 for label, count in counts_dict(code).items()}
    rows = []
    for i, day in enumerate(days):
        rows.append((day, {label: series[i] for label, series in per_label.items()}))
    return rows


# Single-day mood mixes used by the percentage-reproduction checks.
PUNJAB_MAY4 = {
    "Neutral": 450, "Happiness": 300, "Sadness": 120, "Anger": 60,
    "Surprise": 40, "Fear": 20, "Disgust": 10,
}  # total 1000: 45% Neutral, 30% Happiness

NATION_MAY1 = {
    "Happiness": 2600, "Sadness": 1800, "Neutral": 3000, "Anger": 900,
    "Surprise": 800, "Fear": 500, "Disgust": 400,
}  # total 10000: 26% Happiness, 18% Sadness
