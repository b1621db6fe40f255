import { describe, expect, it } from "vitest";

import { renderSweep } from "../src/sweepChart.js";
import type { SweepDoc } from "../src/types.js";
import { sweepDoc } from "./helpers.js";

function container(): HTMLElement {
  document.body.innerHTML = '<div id="slot"></div>';
  return document.getElementById("slot") as HTMLElement;
}

describe("renderSweep", () => {
  it("draws one curve per role and one rule per ordering change", () => {
    const slot = container();
    renderSweep(slot, sweepDoc());
    const curves = [...slot.querySelectorAll<SVGPolylineElement>(".curve")];
    expect(curves.map((c) => c.dataset.role).sort()).toEqual(["r1", "r2"]);
    expect(slot.querySelectorAll(".change-rule")).toHaveLength(1);
  });

  it("places every grid point on each curve", () => {
    const slot = container();
    const doc = sweepDoc();
    renderSweep(slot, doc);
    for (const curve of slot.querySelectorAll<SVGPolylineElement>(".curve")) {
      expect(curve.getAttribute("points")?.split(" ")).toHaveLength(doc.grid.length);
    }
  });

  it("marks the current s when inside the grid", () => {
    const slot = container();
    renderSweep(slot, sweepDoc(), 2.0);
    expect(slot.querySelectorAll(".s-marker")).toHaveLength(1);
    renderSweep(slot, sweepDoc(), 99.0);
    expect(slot.querySelectorAll(".s-marker")).toHaveLength(0);
  });

  it("renders a singleton candidate as one flat curve at 1.0", () => {
    const slot = container();
    const single: SweepDoc = {
      grid: [0.5, 1, 2],
      rankings: [0.5, 1, 2].map((s) => ({
        mode: "ranked",
        scores: [
          {
            role: "r9",
            dp: 1,
            dr: 1,
            extended: {},
            perCriterionWeight: {},
            probability: 1.0,
          },
        ],
        selected: "r9",
        parameters: {
          required: ["p1"],
          s,
          criteria: [],
          alpha: 1,
          lambda: 1,
        },
        version: 1,
      })),
      changePoints: [],
      version: 1,
    };
    renderSweep(slot, single);
    const curves = slot.querySelectorAll<SVGPolylineElement>(".curve");
    expect(curves).toHaveLength(1);
    const ys = [...(curves[0].getAttribute("points") ?? "").matchAll(/,([\d.]+)/g)].map(
      (m) => m[1],
    );
    expect(new Set(ys).size).toBe(1); // flat line
    expect(slot.querySelectorAll(".change-rule")).toHaveLength(0);
  });
});
