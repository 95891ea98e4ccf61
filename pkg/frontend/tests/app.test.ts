import { beforeEach, describe, expect, it } from "vitest";

import { createApp, type App } from "../src/app";
import { EMOTIONS } from "../src/types";
import { fixtureFetcher, loadFixture, type RecordingFetcher } from "./helpers";

let fetcher: RecordingFetcher;
let app: App;

async function boot(): Promise<void> {
  document.body.replaceChildren();
  const root = document.createElement("div");
  document.body.appendChild(root);
  fetcher = fixtureFetcher();
  app = await createApp(root, fetcher);
}

function barData(): string {
  const cfg = JSON.parse(app.elements.barCanvas.dataset.config!);
  return JSON.stringify(cfg.data.datasets[0].data);
}

function lineConfigStr(): string {
  return app.elements.lineCanvas.dataset.config!;
}

beforeEach(boot);

describe("initial load", () => {
  it("defaults to the store's range and renders nation numbers from the payload", () => {
    const nation = loadFixture("nation.json");
    expect(app.state().from).toBe(nation.from);
    expect(app.state().to).toBe(nation.to);
    expect(app.state().sliderDay).toBe(nation.to);
    expect(app.elements.totalRange.textContent).toBe(
      `Total posts analysed: ${nation.total_posts}`,
    );
    const last = nation.series[nation.series.length - 1];
    expect(app.elements.totalDay.textContent).toBe(
      `Posts analysed on ${last.date}: ${last.total}`,
    );
    expect(barData()).toBe(JSON.stringify(EMOTIONS.map((e) => last.percentages[e])));
  });

  it("requests the snapshot for the initial slider day", () => {
    expect(fetcher.log).toContain("/api/snapshot/2020-05-04");
  });

  it("lists trigger events from the API", () => {
    const events = loadFixture("events.json").events;
    const options = Array.from(app.elements.eventSelect.querySelectorAll("option")).slice(1);
    expect(options.map((o) => o.getAttribute("value"))).toEqual(
      events.map((e: any) => e.name),
    );
  });
});

describe("state selection", () => {
  it("clicking a state issues exactly one state-scoped request", async () => {
    const before = fetcher.countMatching(/^\/api\/state\//);
    const pb = app.map.svg.querySelector('path[data-state="PB"]')!;
    pb.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await Promise.resolve();
    await new Promise((r) => setTimeout(r, 0));
    expect(fetcher.countMatching(/^\/api\/state\//) - before).toBe(1);
    expect(fetcher.log).toContain("/api/state/PB?from=2020-04-28&to=2020-05-04");
    expect(app.state().scope).toEqual({ kind: "state", code: "PB" });
  });

  it("renders the state payload fields after selection", async () => {
    await app.gotoScope({ kind: "state", code: "PB" });
    const pb = loadFixture("state_PB.json");
    expect(app.elements.totalRange.textContent).toBe(
      `Total posts analysed: ${pb.total_posts}`,
    );
    expect(app.elements.covidRange.textContent).toBe(
      `Cases in range: ${pb.covid_totals.confirmed} confirmed, ` +
      `${pb.covid_totals.recovered} recovered, ${pb.covid_totals.deceased} deceased`,
    );
    expect(app.elements.summaryLine.textContent).toBe(
      `Top moods: ${pb.summary.top_two.join(", ")}`,
    );
  });

  it("city selection hits the city endpoint", async () => {
    await app.gotoScope({ kind: "city", name: "Chennai" });
    expect(fetcher.log).toContain("/api/city/Chennai?from=2020-04-28&to=2020-05-04");
    const chennai = loadFixture("city_Chennai.json");
    expect(app.elements.totalRange.textContent).toBe(
      `Total posts analysed: ${chennai.total_posts}`,
    );
  });
});

describe("slider interaction on a three-day range", () => {
  beforeEach(async () => {
    await app.applyRange("2020-04-28", "2020-04-30");
  });

  it("moves the snapshot date without touching the line chart", async () => {
    const lineBefore = lineConfigStr();
    const snapshotsBefore = fetcher.countMatching(/^\/api\/snapshot\//);
    const scopeBefore = fetcher.countMatching(/^\/api\/nation/);

    await app.moveSliderTo("2020-04-29");

    expect(fetcher.log[fetcher.log.length - 1]).toBe("/api/snapshot/2020-04-29");
    expect(fetcher.countMatching(/^\/api\/snapshot\//) - snapshotsBefore).toBe(1);
    expect(fetcher.countMatching(/^\/api\/nation/)).toBe(scopeBefore); // no new scope query
    expect(lineConfigStr()).toBe(lineBefore); // line chart (range) untouched
    expect(app.state().sliderDay).toBe("2020-04-29");
  });

  it("re-renders the bar chart from the already-loaded series point", async () => {
    const nation3 = loadFixture("nation_3day.json");
    await app.moveSliderTo("2020-04-29");
    const point = nation3.series.find((p: any) => p.date === "2020-04-29");
    expect(barData()).toBe(JSON.stringify(EMOTIONS.map((e) => point.percentages[e])));
    expect(app.elements.totalDay.textContent).toBe(
      `Posts analysed on ${point.date}: ${point.total}`,
    );
  });

  it("slider element drives the same path", async () => {
    const slider = app.elements.slider as HTMLInputElement;
    expect(slider.max).toBe("2");
    slider.value = "0";
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    await new Promise((r) => setTimeout(r, 0));
    expect(app.state().sliderDay).toBe("2020-04-28");
    expect(fetcher.log).toContain("/api/snapshot/2020-04-28");
  });
});

describe("concurrent scope requests", () => {
  it("a stale slow response never overwrites a newer one", async () => {
    // delay the PB response so the nation response (issued later) returns first
    const inner = fetcher;
    let release!: () => void;
    const gate = new Promise<void>((resolve) => { release = resolve; });
    const delayed: typeof inner = (async (path: string) => {
      const result = await inner(path);
      if (path.startsWith("/api/state/PB")) await gate;
      return result;
    }) as any;

    const root = document.createElement("div");
    document.body.appendChild(root);
    const slowApp = await createApp(root, delayed);

    const pbPromise = slowApp.gotoScope({ kind: "state", code: "PB" });
    await slowApp.gotoScope({ kind: "nation" });
    release();
    await pbPromise;

    const nation = loadFixture("nation.json");
    expect(slowApp.state().scope).toEqual({ kind: "nation" });
    expect(slowApp.scopeResponse().region.code).toBe("IN");
    expect(slowApp.elements.totalRange.textContent).toBe(
      `Total posts analysed: ${nation.total_posts}`,
    );
  });
});

describe("trigger events", () => {
  it("selecting an in-range event moves the slider to the event day", async () => {
    const lineBefore = lineConfigStr();
    await app.chooseEvent("Extension of Lockdown by 2 Weeks");
    expect(app.state().sliderDay).toBe("2020-05-01");
    expect(app.state().selectedEvent).toBe("Extension of Lockdown by 2 Weeks");
    expect(fetcher.log).toContain("/api/snapshot/2020-05-01");
    expect(lineConfigStr()).toBe(lineBefore); // range unchanged
  });
});

describe("empty day", () => {
  it("shows the empty-state note when the day has no posts", async () => {
    expect((app.elements.emptyNote as HTMLElement).style.display).toBe("none");
    await app.applyRange("2020-04-27", "2020-04-27");
    expect((app.elements.emptyNote as HTMLElement).style.display).toBe("");
    expect(barData()).toBe(JSON.stringify(EMOTIONS.map(() => 0)));
  });
});

describe("report view", () => {
  it("renders the report document fields", async () => {
    await app.gotoScope({ kind: "state", code: "PB" });
    await app.openReport();
    const doc = loadFixture("report_PB.json");
    const view = app.elements.reportView;
    expect(view.querySelector("h2")!.textContent).toContain("PB");
    const rows = view.querySelectorAll("table tr");
    expect(rows.length).toBe(doc.days.length + 1); // header + one row per day
    const summary = view.querySelector(".report-summary")!.textContent!;
    expect(summary).toContain(String(doc.range.total));
    expect(summary).toContain(String(doc.range.covid.confirmed));
  });
});
