// Request building and the fetch seam.  Every view pulls its numbers from
// these endpoints; nothing is computed client-side.

import type { ViewState } from "./state";

export type Fetcher = (path: string) => Promise<any>;

export function buildQuery(v: ViewState): string {
  const params = `from=${v.from}&to=${v.to}`;
  switch (v.scope.kind) {
    case "nation":
      return `/api/nation?${params}`;
    case "state":
      return `/api/state/${v.scope.code}?${params}`;
    case "city":
      return `/api/city/${encodeURIComponent(v.scope.name)}?${params}`;
  }
}

export function snapshotPath(day: string): string {
  return `/api/snapshot/${day}`;
}

export function reportPath(v: ViewState): string {
  const region =
    v.scope.kind === "nation" ? "IN" :
    v.scope.kind === "state" ? v.scope.code : v.scope.name;
  return `/api/report?region=${encodeURIComponent(region)}&from=${v.from}&to=${v.to}`;
}

export const httpFetcher: Fetcher = async (path) => {
  const resp = await fetch(path);
  if (!resp.ok) {
    throw new Error(`${path} -> ${resp.status}`);
  }
  return resp.json();
};
