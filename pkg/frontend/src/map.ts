// Inline SVG choropleth built from the backend's boundary file: one path per
// state (fill shaded by confirmed-case intensity) plus up to two emotion pins
// at each state's label point.

import type { BoundaryCollection, BoundaryFeature, Snapshot } from "./types";
import { EMOTION_CODES, EMOTION_COLORS } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 760;

// Shade endpoints: zero cases -> pale, day maximum -> deep red.
const LIGHT = [0xfe, 0xe8, 0xe0];
const DARK = [0x7f, 0x1d, 0x1d];

export function shadeFor(intensity: number): string {
  const t = Math.max(0, Math.min(1, intensity));
  const rgb = LIGHT.map((l, i) => Math.round(l + (DARK[i] - l) * t));
  return "#" + rgb.map((c) => c.toString(16).padStart(2, "0")).join("");
}

interface Projection {
  x(lon: number): number;
  y(lat: number): number;
  height: number;
}

function rings(feature: BoundaryFeature): number[][][] {
  const geom = feature.geometry;
  if (geom.type === "Polygon") {
    return geom.coordinates as number[][][];
  }
  return (geom.coordinates as number[][][][]).flat();
}

function makeProjection(boundaries: BoundaryCollection): Projection {
  let minLon = Infinity, maxLon = -Infinity, minLat = Infinity, maxLat = -Infinity;
  for (const feature of boundaries.features) {
    for (const ring of rings(feature)) {
      for (const [lon, lat] of ring) {
        minLon = Math.min(minLon, lon);
        maxLon = Math.max(maxLon, lon);
        minLat = Math.min(minLat, lat);
        maxLat = Math.max(maxLat, lat);
      }
    }
  }
  const scale = WIDTH / (maxLon - minLon);
  return {
    x: (lon) => (lon - minLon) * scale,
    y: (lat) => (maxLat - lat) * scale,
    height: (maxLat - minLat) * scale,
  };
}

function pathData(feature: BoundaryFeature, proj: Projection): string {
  const parts: string[] = [];
  for (const ring of rings(feature)) {
    const pts = ring.map(([lon, lat]) => `${proj.x(lon).toFixed(1)},${proj.y(lat).toFixed(1)}`);
    parts.push("M" + pts.join("L") + "Z");
  }
  return parts.join("");
}

function labelPoint(feature: BoundaryFeature, proj: Projection): [number, number] {
  // centroid of the largest ring (by bbox area): good enough for a pin anchor
  let best: number[][] | null = null;
  let bestArea = -1;
  for (const ring of rings(feature)) {
    let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
    for (const [lon, lat] of ring) {
      minX = Math.min(minX, lon); maxX = Math.max(maxX, lon);
      minY = Math.min(minY, lat); maxY = Math.max(maxY, lat);
    }
    const area = (maxX - minX) * (maxY - minY);
    if (area > bestArea) {
      bestArea = area;
      best = ring;
    }
  }
  let sx = 0, sy = 0;
  for (const [lon, lat] of best!) {
    sx += proj.x(lon);
    sy += proj.y(lat);
  }
  return [sx / best!.length, sy / best!.length];
}

export interface MapView {
  svg: SVGSVGElement;
  update(snapshot: Snapshot): void;
  select(code: string | null): void;
}

export function renderMap(
  container: HTMLElement,
  boundaries: BoundaryCollection,
  onStateClick: (code: string) => void,
): MapView {
  const proj = makeProjection(boundaries);
  const svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${Math.ceil(proj.height)}`);
  svg.setAttribute("data-testid", "map");
  svg.classList.add("india-map");

  const shapes = document.createElementNS(SVG_NS, "g");
  const pins = document.createElementNS(SVG_NS, "g");
  svg.appendChild(shapes);
  svg.appendChild(pins);

  const pathByCode = new Map<string, SVGPathElement>();
  const anchorByCode = new Map<string, [number, number]>();
  for (const feature of boundaries.features) {
    const code = feature.properties.state_code;
    const path = document.createElementNS(SVG_NS, "path") as SVGPathElement;
    path.setAttribute("d", pathData(feature, proj));
    path.setAttribute("fill-rule", "evenodd");
    path.setAttribute("fill", shadeFor(0));
    path.setAttribute("data-state", code);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = feature.properties.name ?? code;
    path.appendChild(title);
    path.addEventListener("click", () => onStateClick(code));
    shapes.appendChild(path);
    pathByCode.set(code, path);
    anchorByCode.set(code, labelPoint(feature, proj));
  }

  function update(snapshot: Snapshot): void {
    pins.replaceChildren();
    for (const [code, path] of pathByCode) {
      const entry = snapshot.states[code];
      const intensity = entry ? entry.intensity : 0;
      path.setAttribute("fill", shadeFor(intensity));
      if (entry) {
        const title = path.querySelector("title");
        if (title) {
          title.textContent =
            `${code}: ${entry.confirmed} confirmed` +
            (entry.top_two.length ? `, mood ${entry.top_two.join(" / ")}` : "");
        }
      }
      if (!entry || entry.top_two.length === 0) continue;
      const [ax, ay] = anchorByCode.get(code)!;
      entry.top_two.forEach((emotion, rank) => {
        const g = document.createElementNS(SVG_NS, "g");
        g.setAttribute("class", "pin");
        g.setAttribute("data-state", code);
        g.setAttribute("data-emotion", emotion);
        g.setAttribute("data-rank", String(rank + 1));
        const x = ax + rank * 14 - 7;
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", x.toFixed(1));
        circle.setAttribute("cy", ay.toFixed(1));
        circle.setAttribute("r", rank === 0 ? "7" : "5.5");
        circle.setAttribute("fill", EMOTION_COLORS[emotion]);
        const text = document.createElementNS(SVG_NS, "text");
        text.setAttribute("x", x.toFixed(1));
        text.setAttribute("y", (ay + 2.5).toFixed(1));
        text.setAttribute("text-anchor", "middle");
        text.textContent = EMOTION_CODES[emotion];
        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = emotion;
        g.appendChild(circle);
        g.appendChild(text);
        g.appendChild(title);
        pins.appendChild(g);
      });
    }
  }

  function select(code: string | null): void {
    for (const [c, path] of pathByCode) {
      path.classList.toggle("selected", c === code);
    }
  }

  container.appendChild(svg);
  return { svg, update, select };
}
