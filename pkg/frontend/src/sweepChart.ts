/** Probability-vs-s curves on a log axis, change intervals marked as vertical rules. */

import type { SweepDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 680;
const HEIGHT = 300;
const MARGIN = { top: 16, right: 120, bottom: 34, left: 46 };
const PALETTE = ["#3b6ea5", "#c2542e", "#3d8f5f", "#8657a3", "#b0883a", "#5b5b5b"];

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) el.setAttribute(name, value);
  return el;
}

function rolesInOrder(doc: SweepDoc): string[] {
  const seen = new Set<string>();
  for (const ranking of doc.rankings) {
    for (const score of ranking.scores) seen.add(score.role);
  }
  return [...seen].sort();
}

export function renderSweep(container: HTMLElement, doc: SweepDoc, currentS?: number): void {
  container.textContent = "";
  if (doc.grid.length === 0) return;

  const innerW = WIDTH - MARGIN.left - MARGIN.right;
  const innerH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const logMin = Math.log10(doc.grid[0]);
  const logMax = Math.log10(doc.grid[doc.grid.length - 1]);
  const span = logMax - logMin || 1;
  const x = (s: number) => MARGIN.left + ((Math.log10(s) - logMin) / span) * innerW;
  const y = (p: number) => MARGIN.top + (1 - p) * innerH;

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "sweep-chart",
    width: String(WIDTH),
    height: String(HEIGHT),
  });

  // frame and y ticks
  for (const p of [0, 0.25, 0.5, 0.75, 1]) {
    svg.appendChild(
      svgEl("line", {
        x1: String(MARGIN.left),
        x2: String(MARGIN.left + innerW),
        y1: String(y(p)),
        y2: String(y(p)),
        class: "gridline",
      }),
    );
    const label = svgEl("text", {
      x: String(MARGIN.left - 6),
      y: String(y(p) + 3),
      class: "tick",
      "text-anchor": "end",
    });
    label.textContent = p.toFixed(2);
    svg.appendChild(label);
  }

  // x ticks at decades that fall inside the grid
  for (const s of [0.1, 0.5, 1, 2, 5, 10]) {
    if (s < doc.grid[0] || s > doc.grid[doc.grid.length - 1]) continue;
    const label = svgEl("text", {
      x: String(x(s)),
      y: String(MARGIN.top + innerH + 16),
      class: "tick",
      "text-anchor": "middle",
    });
    label.textContent = String(s);
    svg.appendChild(label);
  }
  const axisLabel = svgEl("text", {
    x: String(MARGIN.left + innerW / 2),
    y: String(HEIGHT - 6),
    class: "axis-label",
    "text-anchor": "middle",
  });
  axisLabel.textContent = "danger ratio s (log scale)";
  svg.appendChild(axisLabel);

  // one ordering-change rule per flip, at the geometric middle of the interval
  for (const change of doc.changePoints) {
    const mid = Math.sqrt(change.sLow * change.sHigh);
    svg.appendChild(
      svgEl("line", {
        x1: String(x(mid)),
        x2: String(x(mid)),
        y1: String(MARGIN.top),
        y2: String(MARGIN.top + innerH),
        class: "change-rule",
      }),
    );
  }

  const roles = rolesInOrder(doc);
  roles.forEach((role, index) => {
    const points: string[] = [];
    doc.rankings.forEach((ranking, i) => {
      const score = ranking.scores.find((sc) => sc.role === role);
      if (score) points.push(`${x(doc.grid[i])},${y(score.probability)}`);
    });
    const curve = svgEl("polyline", {
      points: points.join(" "),
      class: "curve",
      fill: "none",
      stroke: PALETTE[index % PALETTE.length],
      "stroke-width": "2",
    });
    curve.dataset.role = role;
    svg.appendChild(curve);

    const legendY = MARGIN.top + 14 * index + 8;
    svg.appendChild(
      svgEl("rect", {
        x: String(MARGIN.left + innerW + 12),
        y: String(legendY - 7),
        width: "10",
        height: "10",
        fill: PALETTE[index % PALETTE.length],
      }),
    );
    const label = svgEl("text", {
      x: String(MARGIN.left + innerW + 27),
      y: String(legendY + 2),
      class: "legend",
    });
    label.textContent = role;
    svg.appendChild(label);
  });

  if (currentS !== undefined && currentS >= doc.grid[0] && currentS <= doc.grid[doc.grid.length - 1]) {
    svg.appendChild(
      svgEl("line", {
        x1: String(x(currentS)),
        x2: String(x(currentS)),
        y1: String(MARGIN.top),
        y2: String(MARGIN.top + innerH),
        class: "s-marker",
      }),
    );
  }

  container.appendChild(svg);
}
