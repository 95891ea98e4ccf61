// Payload shapes mirrored from the backend API (docs/api.md).

export type EmotionLabel =
  | "Anger"
  | "Disgust"
  | "Fear"
  | "Happiness"
  | "Sadness"
  | "Surprise"
  | "Neutral";

export const EMOTIONS: EmotionLabel[] = [
  "Anger", "Disgust", "Fear", "Happiness", "Sadness", "Surprise", "Neutral",
];

export const EMOTION_CODES: Record<EmotionLabel, string> = {
  Anger: "A", Disgust: "D", Fear: "F", Happiness: "H",
  Sadness: "SA", Surprise: "S", Neutral: "N",
};

export const EMOTION_COLORS: Record<EmotionLabel, string> = {
  Anger: "#d62728", Disgust: "#8c564b", Fear: "#9467bd", Happiness: "#2ca02c",
  Sadness: "#1f77b4", Surprise: "#ff7f0e", Neutral: "#7f7f7f",
};

export interface CovidCounts {
  confirmed: number;
  recovered: number;
  deceased: number;
}

export interface SeriesPoint {
  date: string;
  counts: Record<EmotionLabel, number>;
  total: number;
  percentages: Record<EmotionLabel, number>;
  covid: CovidCounts | null;
}

export interface ScopeResponse {
  region: { kind: string; code: string };
  from: string;
  to: string;
  store_range: { from: string; to: string } | null;
  total_posts: number;
  series: SeriesPoint[];
  summary: {
    top_two: EmotionLabel[];
    percentages: Record<EmotionLabel, number>;
    total: number;
  };
  covid_totals: CovidCounts;
}

export interface SnapshotEntry {
  top_two: EmotionLabel[];
  total: number;
  confirmed: number;
  intensity: number;
}

export interface Snapshot {
  date: string;
  states: Record<string, SnapshotEntry>;
}

export interface TriggerEvent {
  name: string;
  date: string;
}

export interface CityInfo {
  name: string;
  lat: number;
  lon: number;
  radius_km: number;
  state_code: string | null;
}

export interface ReportDay {
  date: string;
  counts: Record<EmotionLabel, number>;
  total: number;
  top_two: EmotionLabel[];
  percentages: Record<EmotionLabel, number>;
  covid: CovidCounts;
}

export interface ReportDoc {
  region: { kind: string; code: string };
  from: string;
  to: string;
  days: ReportDay[];
  range: {
    counts: Record<EmotionLabel, number>;
    total: number;
    top_two: EmotionLabel[];
    percentages: Record<EmotionLabel, number>;
    covid: CovidCounts;
  };
}

// GeoJSON subset used by the bundled boundary file.
export interface BoundaryFeature {
  type: "Feature";
  properties: { state_code: string; name?: string };
  geometry: {
    type: "Polygon" | "MultiPolygon";
    coordinates: number[][][] | number[][][][];
  };
}

export interface BoundaryCollection {
  type: "FeatureCollection";
  features: BoundaryFeature[];
}
