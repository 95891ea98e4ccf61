// Portal wiring: one ViewState drives the map, charts, totals, and report.
// All interactions funnel through the programmatic methods returned by
// createApp, so the contract tests can drive the UI with a fake fetcher.
//
// Request discipline: changing scope issues exactly one scope request;
// moving the slider issues exactly one snapshot request and re-renders the
// bar chart from the already-loaded series (the line chart is untouched).

import { buildQuery, reportPath, snapshotPath, type Fetcher } from "./api";
import { barConfig, lineConfig, mountChart } from "./charts";
import { renderMap, type MapView } from "./map";
import { renderReport } from "./report";
import {
  initialState, listDays, selectEvent, setRange, setScope, setSliderDay,
  type Scope, type ViewState,
} from "./state";
import type {
  BoundaryCollection, CityInfo, ScopeResponse, SeriesPoint, TriggerEvent,
} from "./types";

export interface App {
  state(): ViewState;
  scopeResponse(): ScopeResponse;
  gotoScope(scope: Scope): Promise<void>;
  moveSliderTo(day: string): Promise<void>;
  applyRange(from: string, to: string): Promise<void>;
  chooseEvent(name: string): Promise<void>;
  openReport(): Promise<void>;
  elements: Record<string, HTMLElement>;
  map: MapView;
}

function h<K extends keyof HTMLElementTagNameMap>(
  tag: K, attrs: Record<string, string> = {}, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function scopeTitle(scope: Scope): string {
  switch (scope.kind) {
    case "nation": return "India";
    case "state": return scope.code;
    case "city": return scope.name;
  }
}

export async function createApp(root: HTMLElement, fetcher: Fetcher): Promise<App> {
  const [boundaries, eventsDoc, citiesDoc, first] = await Promise.all([
    fetcher("/api/boundaries") as Promise<BoundaryCollection>,
    fetcher("/api/events") as Promise<{ events: TriggerEvent[] }>,
    fetcher("/api/cities") as Promise<{ cities: CityInfo[] }>,
    fetcher("/api/nation") as Promise<ScopeResponse>,
  ]);
  const events = eventsDoc.events;

  let state = initialState(first.from, first.to);
  let current = first;

  // -- static layout -------------------------------------------------------
  root.replaceChildren();
  const header = h("header");
  header.appendChild(h("h1", {}, "Mood of the Nation"));
  const controls = h("div", { class: "controls" });

  const nationBtn = h("button", { "data-testid": "nationBtn" }, "Nation-wide");
  const citySelect = h("select", { "data-testid": "citySelect" });
  citySelect.appendChild(h("option", { value: "" }, "Cities..."));
  for (const city of citiesDoc.cities) {
    citySelect.appendChild(h("option", { value: city.name }, city.name));
  }
  const eventSelect = h("select", { "data-testid": "eventSelect" });
  eventSelect.appendChild(h("option", { value: "" }, "Trigger events..."));
  for (const ev of events) {
    eventSelect.appendChild(h("option", { value: ev.name }, `${ev.name} (${ev.date})`));
  }
  const fromInput = h("input", { type: "date", "data-testid": "fromInput" });
  const toInput = h("input", { type: "date", "data-testid": "toInput" });
  const applyBtn = h("button", { "data-testid": "applyBtn" }, "Apply range");
  const reportBtn = h("button", { "data-testid": "reportBtn" }, "Report");
  controls.append(nationBtn, citySelect, eventSelect, fromInput, toInput, applyBtn, reportBtn);
  header.appendChild(controls);
  root.appendChild(header);

  const mainRow = h("div", { class: "main-row" });
  const mapPanel = h("div", { class: "map-panel" });
  const sidePanel = h("div", { class: "side-panel" });
  mainRow.append(mapPanel, sidePanel);
  root.appendChild(mainRow);

  const scopeHeading = h("h2", { "data-testid": "scopeHeading" });
  const totalRange = h("div", { class: "total", "data-testid": "totalRange" });
  const totalDay = h("div", { class: "total", "data-testid": "totalDay" });
  const covidRange = h("div", { class: "covid", "data-testid": "covidRange" });
  const covidDay = h("div", { class: "covid", "data-testid": "covidDay" });
  const summaryLine = h("div", { class: "summary", "data-testid": "summaryLine" });

  const sliderLabel = h("div", { class: "slider-label", "data-testid": "sliderLabel" });
  const slider = h("input", {
    type: "range", min: "0", step: "1", "data-testid": "slider",
  });
  const emptyNote = h("div", { class: "empty-note", "data-testid": "emptyNote" },
    "No posts analysed on this day.");
  emptyNote.style.display = "none";

  const barCanvas = h("canvas", { "data-testid": "barCanvas", width: "420", height: "260" });
  const lineCanvas = h("canvas", { "data-testid": "lineCanvas", width: "420", height: "260" });
  const reportView = h("div", { class: "report-view", "data-testid": "reportView" });

  sidePanel.append(
    scopeHeading, summaryLine, totalRange, covidRange,
    h("h3", {}, "Selected day"), sliderLabel, slider, totalDay, covidDay, emptyNote,
    h("h3", {}, "Mood on the selected day"), barCanvas,
    h("h3", {}, "Trend across the range"), lineCanvas,
  );
  root.appendChild(reportView);

  const map = renderMap(mapPanel, boundaries, (code) => {
    void gotoScope({ kind: "state", code });
  });

  // -- rendering -----------------------------------------------------------

  function currentPoint(): SeriesPoint {
    const point = current.series.find((p) => p.date === state.sliderDay);
    return point ?? current.series[current.series.length - 1];
  }

  function renderDayViews(): Promise<void> {
    const point = currentPoint();
    sliderLabel.textContent = point.date;
    totalDay.textContent = `Posts analysed on ${point.date}: ${point.total}`;
    covidDay.textContent = point.covid
      ? `Cases on ${point.date}: ${point.covid.confirmed} confirmed, ` +
        `${point.covid.recovered} recovered, ${point.covid.deceased} deceased`
      : "";
    emptyNote.style.display = point.total === 0 ? "" : "none";
    return mountChart(barCanvas, barConfig(point));
  }

  function renderScopeViews(): Promise<void> {
    scopeHeading.textContent = `${scopeTitle(state.scope)} · ${current.from} to ${current.to}`;
    totalRange.textContent = `Total posts analysed: ${current.total_posts}`;
    covidRange.textContent =
      `Cases in range: ${current.covid_totals.confirmed} confirmed, ` +
      `${current.covid_totals.recovered} recovered, ${current.covid_totals.deceased} deceased`;
    summaryLine.textContent = current.summary.top_two.length
      ? `Top moods: ${current.summary.top_two.join(", ")}`
      : "No dominant mood in range";
    const days = listDays(state.from, state.to);
    slider.max = String(days.length - 1);
    slider.value = String(Math.max(0, days.indexOf(state.sliderDay)));
    fromInput.value = state.from;
    toInput.value = state.to;
    map.select(state.scope.kind === "state" ? state.scope.code : null);
    return Promise.all([
      mountChart(lineCanvas, lineConfig(current)),
      renderDayViews(),
    ]).then(() => undefined);
  }

  async function refreshScope(): Promise<void> {
    const version = state.version;
    const resp = (await fetcher(buildQuery(state))) as ScopeResponse;
    if (version !== state.version) return; // a newer request superseded this one
    current = resp;
    await renderScopeViews();
  }

  async function refreshSnapshot(): Promise<void> {
    const snap = await fetcher(snapshotPath(state.sliderDay));
    map.update(snap);
  }

  // -- interactions ----------------------------------------------------------

  async function gotoScope(scope: Scope): Promise<void> {
    state = setScope(state, scope);
    await refreshScope();
  }

  async function moveSliderTo(day: string): Promise<void> {
    state = setSliderDay(state, day);
    await Promise.all([renderDayViews(), refreshSnapshot()]);
  }

  async function applyRange(from: string, to: string): Promise<void> {
    state = setRange(state, from, to);
    await Promise.all([refreshScope(), refreshSnapshot()]);
  }

  async function chooseEvent(name: string): Promise<void> {
    const event = events.find((e) => e.name === name);
    if (!event) return;
    const { state: next, rangeChanged } = selectEvent(state, event);
    state = next;
    if (rangeChanged) {
      await Promise.all([refreshScope(), refreshSnapshot()]);
    } else {
      await Promise.all([renderDayViews(), refreshSnapshot()]);
    }
  }

  async function openReport(): Promise<void> {
    const doc = await fetcher(reportPath(state));
    renderReport(reportView, doc);
  }

  nationBtn.addEventListener("click", () => void gotoScope({ kind: "nation" }));
  citySelect.addEventListener("change", () => {
    if (citySelect.value) void gotoScope({ kind: "city", name: citySelect.value });
  });
  eventSelect.addEventListener("change", () => {
    if (eventSelect.value) void chooseEvent(eventSelect.value);
  });
  applyBtn.addEventListener("click", () => {
    if (fromInput.value && toInput.value) void applyRange(fromInput.value, toInput.value);
  });
  slider.addEventListener("input", () => {
    const days = listDays(state.from, state.to);
    const day = days[Number(slider.value)];
    if (day) void moveSliderTo(day);
  });
  reportBtn.addEventListener("click", () => void openReport());

  await renderScopeViews();
  await refreshSnapshot();

  return {
    state: () => state,
    scopeResponse: () => current,
    gotoScope,
    moveSliderTo,
    applyRange,
    chooseEvent,
    openReport,
    map,
    elements: {
      root, nationBtn, citySelect, eventSelect, fromInput, toInput, applyBtn,
      reportBtn, slider, sliderLabel, totalRange, totalDay, covidRange,
      covidDay, summaryLine, emptyNote, barCanvas, lineCanvas, reportView,
      mapPanel,
    },
  };
}
