/** What-if console: live re-ranking against the rolerank service.

The browser never computes rankings itself; every number on screen came
from the engine. Parameter changes are debounced, requests carry sequence
numbers, and stale responses are dropped before rendering.
*/

import { ApiError, Client } from "./api.js";
import { Debouncer } from "./debounce.js";
import { renderDag } from "./dagView.js";
import { clearBanner, renderRanking, showBanner, showHint } from "./rankingView.js";
import { RequestSequencer } from "./sequencer.js";
import { renderSweep } from "./sweepChart.js";
import { enabledCriteria, initialState } from "./types.js";
import type { CriterionToggle, RankingDoc, RolesDoc, SweepDoc, UiState } from "./types.js";
import { validateQuery, validateSweep } from "./validate.js";

const PERMISSION_PATTERN = /^[A-Za-z0-9_.-]+$/;

export interface SweepBounds {
  sMin: number;
  sMax: number;
  steps: number;
}

export interface AppOptions {
  fetchFn?: typeof fetch;
  debounceMs?: number;
  sweepBounds?: SweepBounds;
}

interface Elements {
  banner: HTMLElement;
  chips: HTMLElement;
  permInput: HTMLInputElement;
  permForm: HTMLFormElement;
  slider: HTMLInputElement;
  sValue: HTMLElement;
  alpha: HTMLInputElement;
  lambda: HTMLInputElement;
  ranking: HTMLElement;
  sweep: HTMLElement;
  dag: HTMLElement;
  version: HTMLElement;
}

function errorMessage(err: unknown): string {
  if (err instanceof ApiError) return err.message;
  return `service unreachable: ${err instanceof Error ? err.message : String(err)}`;
}

export class App {
  readonly state: UiState = initialState();
  private readonly client: Client;
  private readonly sweepBounds: SweepBounds;
  private readonly authorizeDebounce: Debouncer;
  private readonly sweepDebounce: Debouncer;
  private readonly authorizeSeq = new RequestSequencer();
  private readonly sweepSeq = new RequestSequencer();
  private readonly els: Elements;
  private roles: RolesDoc | null = null;
  private lastRanking: RankingDoc | null = null;
  private lastSweep: SweepDoc | null = null;

  constructor(
    private readonly root: HTMLElement,
    options: AppOptions = {},
  ) {
    this.client = new Client(options.fetchFn);
    this.sweepBounds = options.sweepBounds ?? { sMin: 0.1, sMax: 10, steps: 25 };
    const delay = options.debounceMs ?? 150;
    this.authorizeDebounce = new Debouncer(delay);
    this.sweepDebounce = new Debouncer(delay);
    this.els = this.buildLayout(root);
    this.wireEvents();
  }

  async start(): Promise<void> {
    try {
      this.roles = await this.client.roles();
      this.els.version.textContent = `hierarchy v${this.roles.version}`;
      this.renderChips();
      renderDag(this.els.dag, this.roles.roles);
      showHint(this.els.ranking, "select permissions to rank candidate roles");
    } catch (err) {
      showBanner(this.els.banner, errorMessage(err));
    }
  }

  // -- layout --------------------------------------------------------------

  private buildLayout(root: HTMLElement): Elements {
    root.innerHTML = `
      <header>
        <h1>rolerank console</h1>
        <span class="version"></span>
      </header>
      <div class="banner-slot"></div>
      <main class="grid">
        <section class="card request-card">
          <h3>permission request</h3>
          <div class="chips"></div>
          <form class="add-perm">
            <input name="perm" placeholder="permission id" autocomplete="off" />
            <button type="submit">add</button>
          </form>
        </section>
        <section class="card params-card">
          <h3>parameters</h3>
          <label class="slider-label">
            danger ratio s = <output class="s-value">1.00</output>
          </label>
          <input class="s-slider" type="range" min="-1" max="1" step="0.01" value="0" />
          <div class="toggles">
            <label><input type="checkbox" data-criterion="availability" /> availability</label>
            <label><input type="checkbox" data-criterion="integrity" /> integrity</label>
            <label><input type="checkbox" data-criterion="manager-cost" /> manager cost</label>
          </div>
          <div class="constants">
            <label>alpha <input class="alpha" type="number" value="1" step="0.1" /></label>
            <label>lambda <input class="lambda" type="number" value="1" step="0.1" min="0.1" /></label>
          </div>
        </section>
        <section class="card ranking-card">
          <h3>ranking</h3>
          <div class="ranking-slot"></div>
        </section>
        <section class="card sweep-card">
          <h3>stability across s</h3>
          <div class="sweep-slot"></div>
        </section>
        <section class="card dag-card">
          <h3>role hierarchy</h3>
          <div class="dag-slot"></div>
        </section>
      </main>
    `;
    const pick = <T extends Element>(selector: string): T => {
      const el = root.querySelector<T>(selector);
      if (!el) throw new Error(`layout is missing ${selector}`);
      return el;
    };
    return {
      banner: pick(".banner-slot"),
      chips: pick(".chips"),
      permInput: pick(".add-perm input"),
      permForm: pick(".add-perm"),
      slider: pick(".s-slider"),
      sValue: pick(".s-value"),
      alpha: pick(".alpha"),
      lambda: pick(".lambda"),
      ranking: pick(".ranking-slot"),
      sweep: pick(".sweep-slot"),
      dag: pick(".dag-slot"),
      version: pick(".version"),
    };
  }

  private wireEvents(): void {
    this.els.slider.addEventListener("input", () => {
      const s = Math.round(10 ** Number(this.els.slider.value) * 100) / 100;
      this.state.s = s;
      this.els.sValue.textContent = s.toFixed(2);
      this.scheduleAuthorize();
      // s only moves the marker; the sweep itself does not depend on it
      if (this.lastSweep) renderSweep(this.els.sweep, this.lastSweep, this.state.s);
    });

    this.els.permForm.addEventListener("submit", (event) => {
      event.preventDefault();
      const id = this.els.permInput.value.trim();
      if (!PERMISSION_PATTERN.test(id)) {
        showHint(this.els.ranking, "permission ids are tokens of letters, digits, ._-");
        return;
      }
      this.els.permInput.value = "";
      this.state.selectedPermissions.add(id);
      this.renderChips();
      this.onRequestChanged();
    });

    for (const box of this.root.querySelectorAll<HTMLInputElement>("input[data-criterion]")) {
      box.addEventListener("change", () => {
        const id = box.dataset.criterion as CriterionToggle;
        this.state.criteria[id] = box.checked;
        this.onRequestChanged();
      });
    }

    this.els.alpha.addEventListener("input", () => {
      this.state.alpha = Number(this.els.alpha.value);
      this.onRequestChanged();
    });
    this.els.lambda.addEventListener("input", () => {
      this.state.lambda = Number(this.els.lambda.value);
      this.onRequestChanged();
    });
  }

  private renderChips(): void {
    const known = new Set<string>();
    for (const role of this.roles?.roles ?? []) {
      for (const perm of role.grants) known.add(perm);
    }
    for (const perm of this.state.selectedPermissions) known.add(perm);

    this.els.chips.textContent = "";
    for (const perm of [...known].sort()) {
      const chip = document.createElement("button");
      chip.type = "button";
      chip.className = "perm-chip";
      chip.dataset.perm = perm;
      chip.textContent = perm;
      if (this.state.selectedPermissions.has(perm)) chip.classList.add("active");
      chip.addEventListener("click", () => {
        if (this.state.selectedPermissions.has(perm)) {
          this.state.selectedPermissions.delete(perm);
        } else {
          this.state.selectedPermissions.add(perm);
        }
        chip.classList.toggle("active");
        this.onRequestChanged();
      });
      this.els.chips.appendChild(chip);
    }
  }

  // -- request plumbing ------------------------------------------------------

  private onRequestChanged(): void {
    this.scheduleAuthorize();
    this.scheduleSweep();
  }

  private requestBody() {
    return {
      require: [...this.state.selectedPermissions].sort(),
      s: this.state.s,
      criteria: enabledCriteria(this.state),
      alpha: this.state.alpha,
      lambda: this.state.lambda,
    };
  }

  private scheduleAuthorize(): void {
    const problem = validateQuery(this.state);
    if (problem) {
      this.authorizeDebounce.cancel();
      showHint(this.els.ranking, problem);
      return;
    }
    this.authorizeDebounce.schedule(() => void this.runAuthorize());
  }

  private async runAuthorize(): Promise<void> {
    const seq = this.authorizeSeq.issue();
    try {
      const doc = await this.client.authorize(this.requestBody());
      if (!this.authorizeSeq.accept(seq)) return;
      this.lastRanking = doc;
      clearBanner(this.els.banner);
      renderRanking(this.els.ranking, doc);
      this.refreshDagHighlight();
    } catch (err) {
      if (!this.authorizeSeq.accept(seq)) return;
      // keep the last good ranking on screen, surface the problem in the banner
      showBanner(this.els.banner, errorMessage(err));
    }
  }

  private scheduleSweep(): void {
    const { sMin, sMax, steps } = this.sweepBounds;
    if (validateQuery(this.state) || validateSweep(sMin, sMax, steps)) {
      this.sweepDebounce.cancel();
      return;
    }
    this.sweepDebounce.schedule(() => void this.runSweep());
  }

  private async runSweep(): Promise<void> {
    const seq = this.sweepSeq.issue();
    try {
      const doc = await this.client.sweep({ ...this.requestBody(), ...this.sweepBounds });
      if (!this.sweepSeq.accept(seq)) return;
      this.lastSweep = doc;
      renderSweep(this.els.sweep, doc, this.state.s);
    } catch (err) {
      if (!this.sweepSeq.accept(seq)) return;
      showBanner(this.els.banner, errorMessage(err));
    }
  }

  private refreshDagHighlight(): void {
    if (!this.roles || !this.lastRanking) return;
    renderDag(this.els.dag, this.roles.roles, {
      candidates: new Set(this.lastRanking.scores.map((score) => score.role)),
      selected: this.lastRanking.selected,
    });
  }
}

export function initApp(root: HTMLElement, options: AppOptions = {}): App {
  return new App(root, options);
}
