/** Client-side mirror of the server's 400 rules: invalid parameters never leave the browser. */

import type { UiState } from "./types.js";

export function validateQuery(state: UiState): string | null {
  if (state.selectedPermissions.size === 0) {
    return "select at least one permission";
  }
  if (!(state.s > 0)) {
    return "danger ratio s must be positive";
  }
  if (!(state.lambda > 0)) {
    return "lambda must be positive";
  }
  if (state.alpha < 0 || !Number.isFinite(state.alpha)) {
    return "alpha must be zero or positive";
  }
  return null;
}

export function validateSweep(sMin: number, sMax: number, steps: number): string | null {
  if (!(sMin > 0)) return "sweep lower bound must be positive";
  if (!(sMin < sMax)) return "sweep bounds must satisfy sMin < sMax";
  if (!Number.isInteger(steps) || steps < 2) return "sweep needs at least 2 steps";
  return null;
}
