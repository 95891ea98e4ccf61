"""Coordinate-to-region resolution.

Maps a posting location to one of the 33 covered states/union territories by
even-odd point-in-polygon tests over a bundled simplified boundary file, and
to one of the six covered cities by great-circle distance to city centers.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Mapping, Optional, Union

STATE_NAMES = {
    "AN": "Andaman and Nicobar Islands",
    "AP": "Andhra Pradesh",
    "AR": "Arunachal Pradesh",
    "AS": "Assam",
    "BR": "Bihar",
    "CH": "Chandigarh",
    "CT": "Chhattisgarh",
    "DD": "Daman and Diu",
    "DL": "Delhi",
    "DN": "Dadra and Nagar Haveli",
    "GA": "Goa",
    "GJ": "Gujarat",
    "HP": "Himachal Pradesh",
    "HR": "Haryana",
    "JH": "Jharkhand",
    "KA": "Karnataka",
    "KL": "Kerala",
    "MH": "Maharashtra",
    "ML": "Meghalaya",
    "MN": "Manipur",
    "MP": "Madhya Pradesh",
    "MZ": "Mizoram",
    "NL": "Nagaland",
    "OR": "Orissa",
    "PB": "Punjab",
    "PY": "Pondicherry",
    "RJ": "Rajasthan",
    "SK": "Sikkim",
    "TG": "Telangana",
    "TN": "Tamil Nadu",
    "TR": "Tripura",
    "UP": "Uttar Pradesh",
    "WB": "West Bengal",
}
REQUIRED_STATE_CODES = frozenset(STATE_NAMES)

NATION_CODE = "IN"

_EARTH_RADIUS_KM = 6371.0088


class BoundaryError(ValueError):
    """Raised when a boundary or city file cannot be loaded."""


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range: {self.lat}")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"longitude out of range: {self.lon}")


@dataclass(frozen=True)
class RegionId:
    kind: str  # "state" | "city" | "nation"
    code: str

    def __post_init__(self):
        if self.kind not in ("state", "city", "nation"):
            raise ValueError(f"unknown region kind: {self.kind!r}")


NATION = RegionId("nation", NATION_CODE)


@dataclass(frozen=True)
class BoundarySet:
    """State polygon rings plus city centers; immutable after load.

    Rings are stored as (lon, lat) vertex lists.  A point is inside a state
    when a ray crossing count over all of the state's rings is odd, so holes
    need no special casing.
    """

    polygons: Mapping[RegionId, tuple]
    cities: Mapping[RegionId, tuple]  # RegionId -> (GeoPoint, radius_km)
    city_states: Mapping[str, str]  # city name -> enclosing state code


def _feature_rings(geometry: dict) -> list:
    gtype = geometry.get("type")
    coords = geometry.get("coordinates")
    rings = []
    if gtype == "Polygon":
        polys = [coords]
    elif gtype == "MultiPolygon":
        polys = coords
    else:
        raise BoundaryError(f"unsupported geometry type: {gtype!r}")
    try:
        for poly in polys:
            for ring in poly:
                pts = tuple((float(lon), float(lat)) for lon, lat in ring)
                if len(pts) < 4:
                    raise BoundaryError("ring with fewer than 4 vertices")
                rings.append(pts)
    except (TypeError, ValueError) as exc:
        raise BoundaryError(f"malformed geometry: {exc}") from exc
    return rings


def load_boundaries(
    source: Union[str, Path, bytes, BinaryIO],
    city_source: Union[str, Path, None] = None,
) -> BoundarySet:
    """Load state polygons from a GeoJSON feature collection plus a city table.

    Every feature must carry a ``state_code`` property; all 33 covered codes
    must be present.  The city table is CSV ``city,lat,lon,radius_km`` and
    defaults to the bundled six-city file.
    """
    if isinstance(source, (str, Path)):
        raw = Path(source).read_bytes()
    elif isinstance(source, bytes):
        raw = source
    else:
        raw = source.read()
    if not raw.strip():
        raise BoundaryError("empty boundary file")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BoundaryError(f"malformed boundary JSON: {exc}") from exc
    features = doc.get("features")
    if doc.get("type") != "FeatureCollection" or not isinstance(features, list):
        raise BoundaryError("boundary file is not a FeatureCollection")
    polygons: dict[RegionId, list] = {}
    for feature in features:
        props = feature.get("properties") or {}
        code = props.get("state_code")
        if not code:
            raise BoundaryError("feature without state_code property")
        region = RegionId("state", code)
        polygons.setdefault(region, []).extend(_feature_rings(feature.get("geometry") or {}))
    missing = sorted(REQUIRED_STATE_CODES - {r.code for r in polygons})
    if missing:
        raise BoundaryError("missing regions: " + ", ".join(missing))

    cities: dict[RegionId, tuple] = {}
    city_states: dict[str, str] = {}
    if city_source is None:
        text = resources.files("moodmap").joinpath("data/cities.csv").read_text(encoding="utf-8")
    else:
        text = Path(city_source).read_text(encoding="utf-8")
    reader = csv.DictReader(text.splitlines())
    for row in reader:
        try:
            name = row["city"].strip()
            center = GeoPoint(float(row["lat"]), float(row["lon"]))
            radius = float(row["radius_km"])
        except (KeyError, TypeError, ValueError) as exc:
            raise BoundaryError(f"malformed city table row {row!r}: {exc}") from exc
        if radius <= 0:
            raise BoundaryError(f"city {name!r} has non-positive radius")
        cities[RegionId("city", name)] = (center, radius)
        if "state_code" in row and row["state_code"]:
            city_states[name] = row["state_code"].strip()

    frozen = {region: tuple(rings) for region, rings in polygons.items()}
    return BoundarySet(polygons=frozen, cities=cities, city_states=city_states)


def load_default_boundaries() -> BoundarySet:
    ref = resources.files("moodmap").joinpath("data/india_states.geojson")
    with ref.open("rb") as f:
        return load_boundaries(f)


def _point_in_rings(lon: float, lat: float, rings: tuple) -> bool:
    # Even-odd ray cast on planar lon/lat; crossings are XORed across rings.
    inside = False
    for ring in rings:
        j = len(ring) - 1
        for i in range(len(ring)):
            xi, yi = ring[i]
            xj, yj = ring[j]
            if (yi > lat) != (yj > lat):
                x_cross = xi + (lat - yi) * (xj - xi) / (yj - yi)
                if lon < x_cross:
                    inside = not inside
            j = i
    return inside


def resolve_state(p: GeoPoint, b: BoundarySet) -> Optional[RegionId]:
    """Return the state containing ``p``, or None when no polygon does."""
    for region, rings in b.polygons.items():
        if _point_in_rings(p.lon, p.lat, rings):
            return region
    return None


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in kilometres."""
    lat1, lon1, lat2, lon2 = map(math.radians, (a.lat, a.lon, b.lat, b.lon))
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = math.sin(dlat / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2) ** 2
    return 2 * _EARTH_RADIUS_KM * math.asin(math.sqrt(h))


def resolve_city(p: GeoPoint, b: BoundarySet) -> Optional[RegionId]:
    """Return the nearest covered city whose radius contains ``p``, else None."""
    best = None
    best_dist = math.inf
    for region, (center, radius_km) in b.cities.items():
        d = haversine_km(p, center)
        if d <= radius_km and d < best_dist:
            best = region
            best_dist = d
    return best
