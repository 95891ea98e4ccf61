import json

import pytest

from moodmap import geo
from moodmap.geo import BoundaryError, GeoPoint, RegionId


def test_geopoint_bounds():
    GeoPoint(90, 180)
    GeoPoint(-90, -180)
    with pytest.raises(ValueError):
        GeoPoint(91, 0)
    with pytest.raises(ValueError):
        GeoPoint(0, -181)


def test_regionid_kind_validation():
    with pytest.raises(ValueError):
        RegionId("galaxy", "X")


def test_bundled_boundaries_cover_all_states(boundaries):
    codes = {r.code for r in boundaries.polygons}
    assert codes == set(geo.REQUIRED_STATE_CODES)
    assert len(codes) == 33
    assert all(rings for rings in boundaries.polygons.values())


def test_bundled_city_table(boundaries):
    names = {r.code for r in boundaries.cities}
    assert names == {"Mumbai", "Chennai", "Pune", "Hyderabad", "Bangalore", "Tirupati"}
    assert all(radius > 0 for _, radius in boundaries.cities.values())


def test_resolve_state_inside_punjab(boundaries):
    got = geo.resolve_state(GeoPoint(30.90, 75.86), boundaries)
    assert got == RegionId("state", "PB")


def test_resolve_state_chennai_point(boundaries):
    got = geo.resolve_state(GeoPoint(13.0827, 80.2707), boundaries)
    assert got == RegionId("state", "TN")


def test_resolve_state_outside_country(boundaries):
    assert geo.resolve_state(GeoPoint(0.0, 0.0), boundaries) is None
    assert geo.resolve_state(GeoPoint(51.5, -0.1), boundaries) is None


def test_missing_state_code_rejected(boundaries):
    doc = {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "properties": {"state_code": code},
                "geometry": {
                    "type": "Polygon",
                    "coordinates": [[[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]]],
                },
            }
            for code in sorted(geo.REQUIRED_STATE_CODES - {"PB"})
        ],
    }
    with pytest.raises(BoundaryError, match="missing regions: PB"):
        geo.load_boundaries(json.dumps(doc).encode())


def test_empty_boundary_file_rejected():
    with pytest.raises(BoundaryError):
        geo.load_boundaries(b"")
    with pytest.raises(BoundaryError):
        geo.load_boundaries(b"{}")


def test_malformed_geometry_rejected():
    doc = {
        "type": "FeatureCollection",
        "features": [{
            "type": "Feature",
            "properties": {"state_code": "PB"},
            "geometry": {"type": "Polygon", "coordinates": [[[0, 0], [1, 0]]]},
        }],
    }
    with pytest.raises(BoundaryError):
        geo.load_boundaries(json.dumps(doc).encode())
    doc["features"][0]["geometry"] = {"type": "LineString", "coordinates": [[0, 0], [1, 1]]}
    with pytest.raises(BoundaryError):
        geo.load_boundaries(json.dumps(doc).encode())


def test_resolve_city_center_and_radius(boundaries):
    assert geo.resolve_city(GeoPoint(13.0827, 80.2707), boundaries) == RegionId("city", "Chennai")
    # about 10 km north of the Hyderabad center, well inside the 40 km radius
    assert geo.resolve_city(GeoPoint(17.475, 78.4867), boundaries) == RegionId("city", "Hyderabad")
    # far from every covered city
    assert geo.resolve_city(GeoPoint(30.0, 90.0), boundaries) is None


def test_haversine_sanity():
    mumbai = GeoPoint(19.0760, 72.8777)
    pune = GeoPoint(18.5204, 73.8567)
    d = geo.haversine_km(mumbai, pune)
    assert 115 < d < 125  # known ~120 km apart
    assert geo.haversine_km(mumbai, mumbai) == 0


def test_city_centers_resolve_to_enclosing_state(boundaries):
    for region, (center, _radius) in boundaries.cities.items():
        state = geo.resolve_state(center, boundaries)
        assert state is not None
        assert state.code == boundaries.city_states[region.code]


def test_desk_scale_disjointness(boundaries):
    # a coarse interior grid: every probe point is inside at most one state
    lat = 7.0
    while lat < 36.0:
        lon = 68.0
        while lon < 97.5:
            hits = [
                r.code
                for r, rings in boundaries.polygons.items()
                if geo._point_in_rings(lon, lat, rings)
            ]
            assert len(hits) <= 1, f"({lat},{lon}) in {hits}"
            lon += 1.7
        lat += 1.3


def test_resolution_is_deterministic(boundaries):
    p = GeoPoint(22.57, 88.36)
    results = {geo.resolve_state(p, boundaries) for _ in range(5)}
    assert len(results) == 1
