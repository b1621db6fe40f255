/** Ranking table: rows exactly in server order, probability bars, exact-fit badge. */

import type { RankingDoc } from "./types.js";

const EXTENDED_ORDER = ["availability", "integrity", "manager-cost"] as const;

function cell(row: HTMLTableRowElement, className?: string): HTMLTableCellElement {
  const td = row.insertCell();
  if (className) td.className = className;
  return td;
}

export function renderRanking(container: HTMLElement, doc: RankingDoc): void {
  container.textContent = "";

  if (doc.mode === "exact-match") {
    const badge = document.createElement("span");
    badge.className = "badge exact-fit";
    badge.textContent = "exact fit";
    container.appendChild(badge);
  }

  const extended = EXTENDED_ORDER.filter((id) =>
    doc.parameters.criteria.some((spec) => spec.id === id),
  );

  const table = document.createElement("table");
  table.className = "ranking";
  const head = table.createTHead().insertRow();
  for (const label of ["#", "role", "probability", "dp", "dr", ...extended]) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }

  const body = table.createTBody();
  doc.scores.forEach((score, index) => {
    // Never re-sort: the server ordering is the contract.
    const row = body.insertRow();
    row.className = "score-row";
    row.dataset.role = score.role;
    if (score.role === doc.selected) row.classList.add("selected");

    cell(row, "rank").textContent = String(index + 1);
    cell(row, "role").textContent = score.role;

    const probability = cell(row, "probability");
    const track = document.createElement("div");
    track.className = "bar-track";
    const bar = document.createElement("div");
    bar.className = "bar";
    bar.style.width = `${(score.probability * 100).toFixed(1)}%`;
    track.appendChild(bar);
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = `${(score.probability * 100).toFixed(1)}%`;
    probability.appendChild(track);
    probability.appendChild(label);

    cell(row, "dp").textContent = String(score.dp);
    cell(row, "dr").textContent = String(score.dr);
    for (const id of extended) {
      const value = score.extended[id];
      cell(row, "extended").textContent =
        value === undefined ? "–" : Number.isInteger(value) ? String(value) : value.toFixed(3);
    }
  });

  container.appendChild(table);
}

export function showBanner(container: HTMLElement, message: string): void {
  container.textContent = "";
  const banner = document.createElement("div");
  banner.className = "banner error";
  banner.setAttribute("role", "alert");
  banner.textContent = message;
  container.appendChild(banner);
}

export function showHint(container: HTMLElement, message: string): void {
  container.textContent = "";
  const hint = document.createElement("div");
  hint.className = "banner hint";
  hint.textContent = message;
  container.appendChild(hint);
}

export function clearBanner(container: HTMLElement): void {
  container.textContent = "";
}
