// Chart configuration is built as pure data straight from API payload fields
// (the contract tests byte-compare it); chart.js is only loaded when a real
// canvas context exists, so tests run without a canvas implementation.

import type { ScopeResponse, SeriesPoint } from "./types";
import { EMOTIONS, EMOTION_COLORS } from "./types";

export interface ChartConfigLike {
  type: string;
  data: { labels: string[]; datasets: any[] };
  options?: any;
}

export function barConfig(point: SeriesPoint): ChartConfigLike {
  return {
    type: "bar",
    data: {
      labels: [...EMOTIONS],
      datasets: [{
        label: point.date,
        data: EMOTIONS.map((e) => point.percentages[e]),
        backgroundColor: EMOTIONS.map((e) => EMOTION_COLORS[e]),
      }],
    },
    options: {
      animation: false,
      plugins: { legend: { display: false } },
      scales: {
        y: {
          min: 0,
          max: 1,
          ticks: { callback: (v: number) => `${Math.round(v * 100)}%` },
        },
      },
    },
  };
}

export function lineConfig(resp: ScopeResponse): ChartConfigLike {
  return {
    type: "line",
    data: {
      labels: resp.series.map((p) => p.date),
      datasets: EMOTIONS.map((e) => ({
        label: e,
        data: resp.series.map((p) => p.counts[e]),
        borderColor: EMOTION_COLORS[e],
        backgroundColor: EMOTION_COLORS[e],
        pointRadius: 2,
        tension: 0.2,
      })),
    },
    options: {
      animation: false,
      plugins: { legend: { position: "bottom" } },
      scales: { y: { beginAtZero: true } },
    },
  };
}

const charts = new Map<HTMLCanvasElement, any>();

let canvasSupport: boolean | null = null;

function hasCanvas(): boolean {
  if (canvasSupport === null) {
    try {
      canvasSupport = !!document.createElement("canvas").getContext("2d");
    } catch {
      canvasSupport = false;
    }
  }
  return canvasSupport;
}

export async function mountChart(canvas: HTMLCanvasElement, config: ChartConfigLike): Promise<void> {
  // Always stash the config for inspection (and for the contract tests).
  canvas.dataset.config = JSON.stringify(config);
  if (!hasCanvas()) {
    return; // no canvas backend (test environment): config stash is the render
  }
  const { Chart } = await import("chart.js/auto");
  const existing = charts.get(canvas);
  if (existing) {
    existing.config.type = config.type;
    existing.data = config.data;
    existing.options = config.options;
    existing.update();
  } else {
    charts.set(canvas, new Chart(canvas.getContext("2d")!, config as any));
  }
}
