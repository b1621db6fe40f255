/** Dominance DAG, seniors on top: layered by longest path from a root, lexicographic within a layer. */

import type { RoleSummaryDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_R = 17;
const LAYER_H = 74;
const WIDTH = 680;

export interface DagHighlight {
  candidates: ReadonlySet<string>;
  selected: string | null;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) el.setAttribute(name, value);
  return el;
}

/** Longest-path layering: every edge points strictly downward. */
export function layerRoles(roles: RoleSummaryDoc[]): Map<string, number> {
  const layer = new Map<string, number>(roles.map((role) => [role.id, 0]));
  const byId = new Map(roles.map((role) => [role.id, role]));
  // Relax repeatedly; depth is bounded by the role count and graphs are small.
  for (let pass = 0; pass < roles.length; pass += 1) {
    let changed = false;
    for (const role of roles) {
      for (const junior of role.juniors) {
        if (!byId.has(junior)) continue;
        const wanted = (layer.get(role.id) ?? 0) + 1;
        if ((layer.get(junior) ?? 0) < wanted) {
          layer.set(junior, wanted);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return layer;
}

export function renderDag(
  container: HTMLElement,
  roles: RoleSummaryDoc[],
  highlight: DagHighlight = { candidates: new Set(), selected: null },
): void {
  container.textContent = "";
  if (roles.length === 0) return;

  const layers = layerRoles(roles);
  const depth = Math.max(...layers.values()) + 1;
  const rows: string[][] = Array.from({ length: depth }, () => []);
  for (const role of [...roles].sort((a, b) => a.id.localeCompare(b.id))) {
    rows[layers.get(role.id) ?? 0].push(role.id);
  }

  const height = depth * LAYER_H + 20;
  const positions = new Map<string, { x: number; y: number }>();
  rows.forEach((row, level) => {
    row.forEach((id, index) => {
      positions.set(id, {
        x: ((index + 1) * WIDTH) / (row.length + 1),
        y: 30 + level * LAYER_H,
      });
    });
  });

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${height}`,
    class: "dag",
    width: String(WIDTH),
    height: String(height),
  });

  for (const role of roles) {
    const from = positions.get(role.id);
    if (!from) continue;
    for (const junior of role.juniors) {
      const to = positions.get(junior);
      if (!to) continue;
      svg.appendChild(
        svgEl("line", {
          x1: String(from.x),
          y1: String(from.y + NODE_R),
          x2: String(to.x),
          y2: String(to.y - NODE_R),
          class: "dag-edge",
        }),
      );
    }
  }

  for (const role of roles) {
    const pos = positions.get(role.id);
    if (!pos) continue;
    const group = svgEl("g", { class: "dag-node" });
    group.dataset.role = role.id;
    if (highlight.candidates.has(role.id)) group.classList.add("candidate");
    if (highlight.selected === role.id) group.classList.add("selected");
    group.appendChild(
      svgEl("circle", { cx: String(pos.x), cy: String(pos.y), r: String(NODE_R) }),
    );
    const label = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + 4),
      "text-anchor": "middle",
      class: "dag-label",
    });
    label.textContent = role.id;
    group.appendChild(label);
    const meta = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + NODE_R + 12),
      "text-anchor": "middle",
      class: "dag-meta",
    });
    meta.textContent = `p:${role.effectivePermissions} dr:${role.dr}`;
    group.appendChild(meta);
    svg.appendChild(group);
  }

  container.appendChild(svg);
}
