// View state and its transitions.  Invariant: sliderDay is always inside
// [from, to]; selecting a trigger event moves the slider to the event's day
// (widening the range first when the event falls outside it).

import type { TriggerEvent } from "./types";

export type Scope =
  | { kind: "nation" }
  | { kind: "state"; code: string }
  | { kind: "city"; name: string };

export interface ViewState {
  scope: Scope;
  from: string;
  to: string;
  sliderDay: string;
  selectedEvent: string | null;
  version: number;
}

export function initialState(from: string, to: string): ViewState {
  return {
    scope: { kind: "nation" },
    from,
    to,
    sliderDay: to,
    selectedEvent: null,
    version: 0,
  };
}

export function listDays(from: string, to: string): string[] {
  const days: string[] = [];
  const end = new Date(to + "T00:00:00Z").getTime();
  let t = new Date(from + "T00:00:00Z").getTime();
  while (t <= end) {
    days.push(new Date(t).toISOString().slice(0, 10));
    t += 86_400_000;
  }
  return days;
}

export function clampDay(day: string, from: string, to: string): string {
  if (day < from) return from;
  if (day > to) return to;
  return day;
}

export function setScope(v: ViewState, scope: Scope): ViewState {
  return { ...v, scope, version: v.version + 1 };
}

export function setRange(v: ViewState, from: string, to: string): ViewState {
  if (from > to) [from, to] = [to, from];
  return {
    ...v,
    from,
    to,
    sliderDay: clampDay(v.sliderDay, from, to),
    version: v.version + 1,
  };
}

export function setSliderDay(v: ViewState, day: string): ViewState {
  return { ...v, sliderDay: clampDay(day, v.from, v.to), selectedEvent: null };
}

export function selectEvent(v: ViewState, event: TriggerEvent): {
  state: ViewState;
  rangeChanged: boolean;
} {
  let { from, to } = v;
  let rangeChanged = false;
  if (event.date < from) {
    from = event.date;
    rangeChanged = true;
  }
  if (event.date > to) {
    to = event.date;
    rangeChanged = true;
  }
  return {
    state: {
      ...v,
      from,
      to,
      sliderDay: event.date,
      selectedEvent: event.name,
      version: rangeChanged ? v.version + 1 : v.version,
    },
    rangeChanged,
  };
}
