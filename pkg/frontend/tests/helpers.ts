// Test scaffolding: a fixture-backed fetcher that logs every request.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import type { Fetcher } from "../src/api";

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function loadFixture(name: string): any {
  return JSON.parse(readFileSync(join(FIXTURE_DIR, name), "utf-8"));
}

const ROUTES: Record<string, string> = {
  "/api/boundaries": "boundaries.json",
  "/api/events": "events.json",
  "/api/cities": "cities.json",
  "/api/nation": "nation.json",
  "/api/nation?from=2020-04-28&to=2020-05-04": "nation.json",
  "/api/nation?from=2020-04-28&to=2020-04-30": "nation_3day.json",
  "/api/nation?from=2020-04-27&to=2020-04-27": "nation_empty.json",
  "/api/state/PB?from=2020-04-28&to=2020-05-04": "state_PB.json",
  "/api/city/Chennai?from=2020-04-28&to=2020-05-04": "city_Chennai.json",
  "/api/snapshot/2020-04-28": "snapshot_2020-04-28.json",
  "/api/snapshot/2020-04-29": "snapshot_2020-04-29.json",
  "/api/snapshot/2020-04-30": "snapshot_2020-04-30.json",
  "/api/snapshot/2020-05-01": "snapshot_2020-05-01.json",
  "/api/snapshot/2020-05-04": "snapshot_2020-05-04.json",
  "/api/report?region=PB&from=2020-04-28&to=2020-05-04": "report_PB.json",
};

export interface RecordingFetcher extends Fetcher {
  log: string[];
  countMatching(pattern: RegExp): number;
}

export function fixtureFetcher(): RecordingFetcher {
  const log: string[] = [];
  const fetcher = (async (path: string) => {
    log.push(path);
    const file = ROUTES[path];
    if (file) {
      return loadFixture(file);
    }
    if (path.startsWith("/api/snapshot/")) {
      // days with no recorded fixture behave like an empty store day
      return { date: path.slice("/api/snapshot/".length), states: {} };
    }
    throw new Error(`no fixture for ${path}`);
  }) as RecordingFetcher;
  fetcher.log = log;
  fetcher.countMatching = (pattern) => log.filter((p) => pattern.test(p)).length;
  return fetcher;
}

export function luminance(hex: string): number {
  const r = parseInt(hex.slice(1, 3), 16);
  const g = parseInt(hex.slice(3, 5), 16);
  const b = parseInt(hex.slice(5, 7), 16);
  return 0.299 * r + 0.587 * g + 0.114 * b;
}
