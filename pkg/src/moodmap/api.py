"""JSON-over-HTTP read API for the portal, plus an authenticated admin refresh.

All numbers the portal displays come from fields in these payloads; responses
are pure functions of store contents and the explicit date parameters.
"""

from __future__ import annotations

import logging
from datetime import date, datetime, timedelta, timezone
from importlib import resources
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import aggregate as agg_mod
from . import emotions, geo, ingest, jobs
from .store import MoodStore, UnknownRegionError

logger = logging.getLogger(__name__)


def _parse_day(text: str, param: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"bad {param} date {text!r}, expected YYYY-MM-DD")


def _resolve_region(store: MoodStore, code: str) -> geo.RegionId:
    if code == geo.NATION_CODE:
        return geo.NATION
    if code in geo.REQUIRED_STATE_CODES:
        return geo.RegionId("state", code)
    if code in store.known_cities:
        return geo.RegionId("city", code)
    raise HTTPException(status_code=404, detail=f"unknown region {code!r}")


def create_app(
    store: MoodStore,
    boundaries_path: Optional[Path] = None,
    admin_token: Optional[str] = None,
    data_dir: Optional[Path] = None,
    lexicon: Optional[emotions.Lexicon] = None,
    boundaries: Optional[geo.BoundarySet] = None,
    ingest_cfg: Optional[ingest.IngestConfig] = None,
    ui_dir: Optional[Path] = None,
) -> FastAPI:
    app = FastAPI(title="moodmap", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def resolve_range(from_: Optional[str], to: Optional[str]) -> tuple:
        stored = store.data_range()
        if from_ is None and to is None:
            if stored is None:
                today = date.today()
                return today, today, stored
            return stored[0], stored[1], stored
        start = _parse_day(from_, "from") if from_ else (stored[0] if stored else _parse_day(to, "to"))
        end = _parse_day(to, "to") if to else (stored[1] if stored else start)
        if start > end:
            raise HTTPException(status_code=400, detail=f"invalid range: {start} > {end}")
        return start, end, stored

    def scope_payload(region: geo.RegionId, from_: Optional[str], to: Optional[str]) -> dict:
        start, end, stored = resolve_range(from_, to)
        try:
            q = store.query(region, start, end)
        except UnknownRegionError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        covid_by_day = {c.date: c for c in q["covid"]}
        series = []
        for day, counts in q["series"].points:
            rec = covid_by_day.get(day)
            series.append({
                "date": day.isoformat(),
                "counts": counts,
                "total": sum(counts.values()),
                "percentages": agg_mod.percentages(counts),
                "covid": (
                    {"confirmed": rec.confirmed, "recovered": rec.recovered, "deceased": rec.deceased}
                    if rec else ({"confirmed": 0, "recovered": 0, "deceased": 0}
                                 if region.kind != "city" else None)
                ),
            })
        summary = q["summary"]
        return {
            "region": {"kind": region.kind, "code": region.code},
            "from": start.isoformat(),
            "to": end.isoformat(),
            "store_range": (
                {"from": stored[0].isoformat(), "to": stored[1].isoformat()} if stored else None
            ),
            "total_posts": q["total_posts"],
            "series": series,
            "summary": {
                "top_two": list(summary.top_two),
                "percentages": dict(summary.percentages),
                "total": summary.total,
            },
            "covid_totals": q["covid_totals"],
        }

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/nation")
    def nation(from_: Optional[str] = Query(None, alias="from"), to: Optional[str] = None):
        return scope_payload(geo.NATION, from_, to)

    @app.get("/api/state/{code}")
    def state(code: str, from_: Optional[str] = Query(None, alias="from"), to: Optional[str] = None):
        region = _resolve_region(store, code.upper())
        if region.kind != "state":
            raise HTTPException(status_code=404, detail=f"unknown state {code!r}")
        return scope_payload(region, from_, to)

    @app.get("/api/city/{name}")
    def city(name: str, from_: Optional[str] = Query(None, alias="from"), to: Optional[str] = None):
        match = next((c for c in store.known_cities if c.lower() == name.lower()), None)
        if match is None:
            raise HTTPException(status_code=404, detail=f"unknown city {name!r}")
        return scope_payload(geo.RegionId("city", match), from_, to)

    @app.get("/api/snapshot/{day}")
    def snapshot(day: str):
        return store.snapshot(_parse_day(day, "snapshot"))

    @app.get("/api/events")
    def events():
        return {"events": [{"name": e.name, "date": e.date.isoformat()} for e in store.get_events()]}

    @app.get("/api/report")
    def report(
        region: str,
        from_: Optional[str] = Query(None, alias="from"),
        to: Optional[str] = None,
    ):
        city = next((c for c in store.known_cities if c.lower() == region.lower()), None)
        rid = _resolve_region(store, city if city is not None else region.upper())
        start, end, _ = resolve_range(from_, to)
        aggs = store.aggregates_for(rid, start, end)
        covid = store.covid_for(rid, start, end)
        return agg_mod.build_report(rid, start, end, aggs, covid)

    @app.get("/api/boundaries")
    def get_boundaries():
        if boundaries_path is not None:
            data = Path(boundaries_path).read_bytes()
        else:
            data = resources.files("moodmap").joinpath("data/india_states.geojson").read_bytes()
        return Response(content=data, media_type="application/geo+json")

    @app.get("/api/cities")
    def cities():
        out = []
        for region, (center, radius_km) in sorted(store_boundaries().cities.items(), key=lambda kv: kv[0].code):
            out.append({
                "name": region.code,
                "lat": center.lat,
                "lon": center.lon,
                "radius_km": radius_km,
                "state_code": store_boundaries().city_states.get(region.code),
            })
        return {"cities": out}

    _boundary_cache: list = []

    def store_boundaries() -> geo.BoundarySet:
        if not _boundary_cache:
            if boundaries is not None:
                _boundary_cache.append(boundaries)
            elif boundaries_path is not None:
                _boundary_cache.append(geo.load_boundaries(boundaries_path))
            else:
                _boundary_cache.append(geo.load_default_boundaries())
        return _boundary_cache[0]

    @app.post("/api/admin/refresh")
    def admin_refresh(request: Request, day: Optional[str] = None):
        if not admin_token:
            raise HTTPException(status_code=403, detail="admin ingest disabled (no token configured)")
        supplied = request.headers.get("x-admin-token")
        if supplied != admin_token:
            raise HTTPException(status_code=403, detail="bad admin token")
        if data_dir is None or lexicon is None:
            raise HTTPException(status_code=503, detail="server not configured for ingest")
        if day is not None:
            # run_daily_job targets the day before its anchor instant
            target = _parse_day(day, "day")
            anchor = datetime(target.year, target.month, target.day, 12, 0, tzinfo=ingest.IST) + timedelta(days=1)
        else:
            anchor = datetime.now(timezone.utc)
        report_doc = jobs.run_daily_job(anchor, store, data_dir, lexicon, store_boundaries(), ingest_cfg)
        status = 200 if report_doc["status"] in ("ok", "skipped") else 500
        return JSONResponse(report_doc, status_code=status)

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
