// Range report rendered client-side from the report document, with a print
// affordance (print styles hide everything else).

import type { ReportDoc } from "./types";
import { EMOTIONS, EMOTION_CODES } from "./types";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, text?: string, className?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (className) node.className = className;
  return node;
}

export function renderReport(container: HTMLElement, doc: ReportDoc): void {
  container.replaceChildren();
  container.appendChild(el("h2", `Report: ${doc.region.code} ${doc.from} to ${doc.to}`));

  const summary = el("p", undefined, "report-summary");
  summary.textContent =
    `${doc.range.total} posts analysed; ` +
    (doc.range.top_two.length ? `top moods ${doc.range.top_two.join(", ")}; ` : "") +
    `cases: ${doc.range.covid.confirmed} confirmed, ` +
    `${doc.range.covid.recovered} recovered, ${doc.range.covid.deceased} deceased`;
  container.appendChild(summary);

  const table = el("table", undefined, "report-table");
  const head = el("tr");
  head.appendChild(el("th", "Date"));
  for (const e of EMOTIONS) head.appendChild(el("th", EMOTION_CODES[e]));
  for (const h of ["Total", "Con", "Rec", "Dec"]) head.appendChild(el("th", h));
  table.appendChild(head);
  for (const day of doc.days) {
    const row = el("tr");
    row.appendChild(el("td", day.date));
    for (const e of EMOTIONS) row.appendChild(el("td", String(day.counts[e])));
    row.appendChild(el("td", String(day.total)));
    row.appendChild(el("td", String(day.covid.confirmed)));
    row.appendChild(el("td", String(day.covid.recovered)));
    row.appendChild(el("td", String(day.covid.deceased)));
    table.appendChild(row);
  }
  container.appendChild(table);

  const print = el("button", "Print / save as PDF", "print-btn");
  print.addEventListener("click", () => window.print());
  container.appendChild(print);
}
