#!/usr/bin/env python3
"""Regenerate the bundled simplified state boundary file.

The shipped india_states.geojson is a synthetic, desk-scale tiling: a coarse
hand-drawn national outline is rasterized onto a 0.25 degree grid and every
land cell is assigned to the nearest state anchor point (weighted so large
states reach further).  Cell unions are traced into rectilinear rings and
written as one MultiPolygon feature per state with a ``state_code`` property.

The result is intentionally simplified geometry, adequate for resolving city
and capital coordinates to the correct state and for rendering a recognizable
choropleth; it is not a surveying product.  Regions outside the covered state
list (e.g. the far north) are absorbed by their nearest covered neighbour.

Run from the repo root:  python3 scripts/build_boundaries.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

RES = 0.25
LAT_MIN, LAT_MAX = 6.5, 36.0
LON_MIN, LON_MAX = 68.0, 97.5

# National outline, (lat, lon), coarse clockwise trace.
OUTLINE = [
    (33.2, 74.0), (34.8, 74.4), (35.5, 76.0), (35.3, 77.8), (34.3, 78.9),
    (32.8, 79.3), (31.2, 79.0), (30.4, 80.3), (28.9, 80.3), (28.0, 81.8),
    (27.3, 83.2), (26.6, 85.2), (26.4, 86.8), (26.4, 88.0), (27.1, 88.1),
    (27.9, 88.6), (27.1, 88.9), (26.8, 89.3), (26.8, 92.0), (27.8, 91.9),
    (28.3, 93.0), (29.2, 94.7), (28.5, 96.0), (28.2, 97.3), (27.0, 97.0),
    (25.9, 95.2), (25.0, 94.7), (23.9, 94.4), (22.7, 93.4), (21.9, 92.9),
    (23.0, 92.35), (22.95, 91.95), (23.05, 91.20), (23.90, 91.10), (24.35, 91.75),
    (24.15, 92.10), (24.4, 92.1), (25.0, 92.5),
    (25.0, 90.0), (25.2, 89.8), (26.3, 89.0), (26.3, 88.4), (25.2, 88.3),
    (24.5, 88.0), (24.3, 88.7), (23.2, 88.9), (22.1, 89.0), (21.6, 88.2),
    (21.7, 87.2), (20.8, 86.9), (19.9, 86.0), (19.0, 84.8), (17.8, 83.4),
    (16.6, 82.3), (15.9, 80.8), (15.0, 80.2), (13.6, 80.3), (12.9, 80.3),
    (11.8, 79.8), (10.8, 79.9), (9.8, 79.2), (9.3, 78.9), (8.9, 78.2),
    (8.1, 77.5), (8.3, 76.9), (9.5, 76.3), (11.0, 75.8), (12.0, 75.2),
    (13.5, 74.7), (14.8, 74.3), (15.5, 73.8), (16.5, 73.4), (17.5, 73.2),
    (18.6, 72.9), (19.2, 72.8), (20.2, 72.8), (21.5, 72.4), (21.0, 71.5),
    (20.7, 70.7), (21.6, 69.2), (22.3, 68.9), (22.5, 69.5), (23.7, 68.2),
    (24.2, 68.8), (24.6, 71.1), (25.8, 70.2), (27.0, 70.0), (28.0, 70.8),
    (29.5, 73.3), (30.3, 73.9), (31.5, 74.5), (32.5, 75.0), (32.8, 74.6),
]

# Island chain handled as its own box, outside the mainland outline.
ISLAND_BOX = {"AN": (6.5, 13.8, 92.0, 94.0)}  # lat0, lat1, lon0, lon1

# Anchor points per state, (lat, lon): capitals plus spread points for the
# larger states so the tiling tracks real extents.
ANCHORS = {
    "AP": [(16.51, 80.65), (17.69, 83.22), (13.63, 79.42), (15.83, 78.04),
           (14.44, 79.99), (17.00, 81.80)],
    "AR": [(27.08, 93.61), (28.20, 94.80), (27.90, 96.20), (28.00, 92.60)],
    "AS": [(26.14, 91.79), (26.70, 92.80), (27.20, 94.60), (24.85, 92.75), (26.30, 90.50)],
    "BR": [(25.59, 85.14), (26.10, 87.10), (25.10, 86.00), (26.50, 84.60), (25.00, 84.00)],
    "CH": [(30.73, 76.78)],
    "CT": [(21.25, 81.63), (22.10, 82.60), (19.90, 81.90), (23.00, 83.00), (20.70, 81.00)],
    "DD": [(20.42, 72.85), (20.71, 70.98)],
    "DL": [(28.61, 77.21)],
    "DN": [(20.27, 73.02)],
    "GA": [(15.49, 73.83), (15.25, 74.05)],
    "GJ": [(23.02, 72.57), (22.30, 70.80), (21.19, 72.85), (23.24, 69.67),
           (22.31, 73.19), (21.52, 70.46), (24.00, 71.50)],
    "HP": [(31.10, 77.17), (32.20, 76.30), (31.70, 77.90), (33.00, 75.80),
           (34.30, 76.50), (34.00, 78.00)],
    "HR": [(29.06, 76.09), (28.46, 77.03), (29.15, 75.72), (30.20, 76.40), (28.20, 76.60)],
    "JH": [(23.34, 85.31), (24.20, 85.80), (22.80, 86.40), (24.40, 84.00), (23.50, 84.20)],
    "KA": [(12.97, 77.59), (15.36, 75.12), (12.30, 76.64), (17.33, 76.83),
           (12.91, 74.86), (15.14, 76.92), (16.20, 75.70), (14.00, 74.80)],
    "KL": [(8.52, 76.94), (9.93, 76.27), (11.25, 75.78), (11.87, 75.37), (10.50, 76.20)],
    "MH": [(19.076, 72.8777), (18.52, 73.86), (21.15, 79.09), (19.88, 75.34),
           (20.00, 73.79), (16.70, 74.24), (20.93, 77.75), (17.66, 75.91), (18.40, 76.60)],
    "ML": [(25.58, 91.89), (25.51, 90.22)],
    "MN": [(24.82, 93.94), (24.50, 93.80)],
    "MP": [(23.26, 77.41), (22.72, 75.86), (26.22, 78.18), (23.18, 79.99),
           (24.53, 81.30), (21.80, 76.10), (24.60, 78.60), (22.10, 74.90)],
    "MZ": [(23.73, 92.72), (22.60, 92.90)],
    "NL": [(25.67, 94.11), (26.10, 94.30)],
    "OR": [(20.30, 85.82), (21.50, 84.00), (19.30, 83.90), (20.50, 83.50), (21.90, 85.00)],
    "PB": [(30.90, 75.86), (31.63, 74.87), (30.34, 76.39), (30.21, 74.95), (31.30, 75.60)],
    "PY": [(11.93, 79.81)],
    "RJ": [(26.91, 75.79), (26.24, 73.02), (24.58, 73.71), (28.02, 73.31),
           (25.21, 75.86), (26.92, 70.90), (29.30, 74.20), (27.50, 72.00), (25.80, 71.50)],
    "SK": [(27.33, 88.61)],
    "TG": [(17.39, 78.49), (17.98, 79.59), (18.67, 78.10), (17.25, 80.15), (16.70, 77.90)],
    "TN": [(13.0827, 80.2707), (11.02, 76.96), (9.93, 78.12), (10.79, 78.70),
           (11.66, 78.15), (8.71, 77.76), (12.20, 79.10), (10.00, 77.50)],
    "TR": [(23.83, 91.28)],
    "UP": [(26.85, 80.95), (26.45, 80.33), (25.32, 82.99), (27.18, 78.01),
           (28.98, 77.71), (26.76, 83.37), (25.45, 78.57), (28.37, 79.43),
           (25.44, 81.85), (29.40, 78.30), (27.60, 80.70)],
    "WB": [(22.57, 88.36), (26.73, 88.40), (23.52, 87.31), (25.01, 88.14),
           (21.90, 87.80), (24.10, 88.20)],
}

# Reach weighting: larger states claim cells further from their anchors.
WEIGHTS = {
    "UP": 1.8, "MH": 1.9, "MP": 1.9, "RJ": 2.2, "GJ": 1.6,
    "AP": 1.5, "KA": 1.5, "TN": 1.5, "AR": 1.5, "HP": 1.5,
    "BR": 1.4, "WB": 1.4, "TG": 1.4, "CT": 1.4, "OR": 1.4, "AS": 1.4,
    "KL": 1.3, "HR": 1.3, "PB": 1.3,
    "JH": 1.2,
}

# Verification points: each must resolve to its own state.
CHECKS = {
    "AN": (11.62, 92.73), "AP": (16.51, 80.65), "AR": (27.08, 93.61),
    "AS": (26.14, 91.79), "BR": (25.59, 85.14), "CH": (30.73, 76.78),
    "CT": (21.25, 81.63), "DD": (20.42, 72.85), "DL": (28.61, 77.21),
    "DN": (20.27, 73.02), "GA": (15.49, 73.83), "GJ": (23.02, 72.57),
    "HP": (31.10, 77.17), "HR": (29.06, 76.09), "JH": (23.34, 85.31),
    "KA": (12.97, 77.59), "KL": (8.52, 76.94), "MH": (19.076, 72.8777),
    "ML": (25.58, 91.89), "MN": (24.82, 93.94), "MP": (23.26, 77.41),
    "MZ": (23.73, 92.72), "NL": (25.67, 94.11), "OR": (20.30, 85.82),
    "PB": (30.90, 75.86), "PY": (11.93, 79.81), "RJ": (26.91, 75.79),
    "SK": (27.33, 88.61), "TG": (17.385, 78.4867), "TN": (13.0827, 80.2707),
    "TR": (23.83, 91.28), "UP": (26.85, 80.95), "WB": (22.57, 88.36),
}

CITY_CHECKS = {
    "Mumbai": ((19.0760, 72.8777), "MH"),
    "Chennai": ((13.0827, 80.2707), "TN"),
    "Pune": ((18.5204, 73.8567), "MH"),
    "Hyderabad": ((17.3850, 78.4867), "TG"),
    "Bangalore": ((12.9716, 77.5946), "KA"),
    "Tirupati": ((13.6288, 79.4192), "AP"),
}


def point_in_outline(lat: float, lon: float) -> bool:
    inside = False
    j = len(OUTLINE) - 1
    for i in range(len(OUTLINE)):
        yi, xi = OUTLINE[i]
        yj, xj = OUTLINE[j]
        if (yi > lat) != (yj > lat):
            x_cross = xi + (lat - yi) * (xj - xi) / (yj - yi)
            if lon < x_cross:
                inside = not inside
        j = i
    return inside


def land_cells() -> dict:
    """Map (i, j) grid cell -> state code."""
    n_lon = int(round((LON_MAX - LON_MIN) / RES))
    n_lat = int(round((LAT_MAX - LAT_MIN) / RES))
    codes = sorted(ANCHORS)
    anchor_rows = []
    anchor_code = []
    for code in codes:
        w = WEIGHTS.get(code, 1.0)
        for lat, lon in ANCHORS[code]:
            anchor_rows.append((lat, lon, w))
            anchor_code.append(code)
    arr = np.array([(a[0], a[1]) for a in anchor_rows])
    wts = np.array([a[2] for a in anchor_rows])

    cells = {}
    for i in range(n_lon):
        lon0 = LON_MIN + i * RES
        for j in range(n_lat):
            lat0 = LAT_MIN + j * RES
            clat, clon = lat0 + RES / 2, lon0 + RES / 2
            for code, (b_lat0, b_lat1, b_lon0, b_lon1) in ISLAND_BOX.items():
                if b_lat0 <= clat <= b_lat1 and b_lon0 <= clon <= b_lon1:
                    cells[(i, j)] = code
                    break
            else:
                probes = [(clat, clon), (lat0, lon0), (lat0, lon0 + RES),
                          (lat0 + RES, lon0), (lat0 + RES, lon0 + RES)]
                if not any(point_in_outline(plat, plon) for plat, plon in probes):
                    continue
                d = np.hypot(arr[:, 0] - clat, arr[:, 1] - clon) / wts
                cells[(i, j)] = anchor_code[int(np.argmin(d))]
    return cells


def trace_rings(cell_set: set) -> list:
    """Trace the rectilinear boundary rings of a set of grid cells.

    Edges are oriented with the interior on the left; at corner touch points
    the walk prefers the sharpest left turn, which keeps loops simple.
    """
    edges = {}

    def add(a, b):
        edges.setdefault(a, []).append(b)

    for (i, j) in cell_set:
        if (i, j - 1) not in cell_set:
            add((i, j), (i + 1, j))
        if (i + 1, j) not in cell_set:
            add((i + 1, j), (i + 1, j + 1))
        if (i, j + 1) not in cell_set:
            add((i + 1, j + 1), (i, j + 1))
        if (i - 1, j) not in cell_set:
            add((i, j + 1), (i, j))

    used = set()
    rings = []
    for start in sorted(edges):
        for first in edges[start]:
            if (start, first) in used:
                continue
            ring = [start]
            prev, cur = start, first
            used.add((start, first))
            while cur != start:
                ring.append(cur)
                dx, dy = cur[0] - prev[0], cur[1] - prev[1]
                # prefer left turn, then straight, then right, then back
                prefs = [(-dy, dx), (dx, dy), (dy, -dx), (-dx, -dy)]
                nxt = None
                for pdx, pdy in prefs:
                    cand = (cur[0] + pdx, cur[1] + pdy)
                    if cand in edges.get(cur, []) and (cur, cand) not in used:
                        nxt = cand
                        break
                if nxt is None:
                    raise RuntimeError(f"open boundary walk at {cur}")
                used.add((cur, nxt))
                prev, cur = cur, nxt
            rings.append(simplify(ring))
    return rings


def simplify(ring: list) -> list:
    out = []
    n = len(ring)
    for k in range(n):
        a, b, c = ring[k - 1], ring[k], ring[(k + 1) % n]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            out.append(b)
    return out


def to_lonlat(ring: list) -> list:
    pts = [[round(LON_MIN + i * RES, 6), round(LAT_MIN + j * RES, 6)] for i, j in ring]
    pts.append(pts[0])
    return pts


def main() -> int:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    from moodmap import geo

    cells = land_cells()
    by_state: dict[str, set] = {}
    for cell, code in cells.items():
        by_state.setdefault(code, set()).add(cell)

    missing = sorted(set(CHECKS) - set(by_state))
    if missing:
        print(f"FAIL: states with no cells: {missing}")
        return 1

    features = []
    for code in sorted(by_state):
        rings = trace_rings(by_state[code])
        features.append({
            "type": "Feature",
            "properties": {"state_code": code, "name": geo.STATE_NAMES[code]},
            "geometry": {
                "type": "MultiPolygon",
                "coordinates": [[to_lonlat(r)] for r in rings],
            },
        })
    doc = {"type": "FeatureCollection", "features": features}
    out = Path(__file__).resolve().parents[1] / "src" / "moodmap" / "data" / "india_states.geojson"
    out.write_text(json.dumps(doc), encoding="utf-8")
    print(f"wrote {len(features)} features, {sum(len(s) for s in by_state.values())} cells -> {out}")

    boundaries = geo.load_boundaries(out)
    ok = True
    for code, (lat, lon) in sorted(CHECKS.items()):
        got = geo.resolve_state(geo.GeoPoint(lat, lon), boundaries)
        if got is None or got.code != code:
            print(f"FAIL: check point for {code} resolved to {got and got.code}")
            ok = False
    for name, ((lat, lon), want) in CITY_CHECKS.items():
        got = geo.resolve_state(geo.GeoPoint(lat, lon), boundaries)
        if got is None or got.code != want:
            print(f"FAIL: {name} resolved to {got and got.code}, want {want}")
            ok = False
    # desk-scale disjointness probe: interior sample points hit at most one state
    overlaps = 0
    for lat in np.arange(LAT_MIN + RES / 2, LAT_MAX, 1.0):
        for lon in np.arange(LON_MIN + RES / 2, LON_MAX, 1.0):
            hits = [r.code for r, rings in boundaries.polygons.items()
                    if geo._point_in_rings(lon, lat, rings)]
            if len(hits) > 1:
                overlaps += 1
                print(f"FAIL: overlap at ({lat},{lon}): {hits}")
    if overlaps:
        ok = False
    print("verification", "OK" if ok else "FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
