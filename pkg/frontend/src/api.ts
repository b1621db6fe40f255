/** Typed client for the rolerank HTTP API. */

import type { RankingDoc, RolesDoc, SweepDoc } from "./types.js";

export interface AuthorizeRequest {
  require: string[];
  s: number;
  criteria: string[];
  alpha: number;
  lambda: number;
}

export interface SweepRequest extends AuthorizeRequest {
  sMin: number;
  sMax: number;
  steps: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function describeError(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
    if (body.detail !== undefined) return JSON.stringify(body.detail);
    return JSON.stringify(body);
  } catch {
    return `HTTP ${response.status}`;
  }
}

export class Client {
  private readonly fetchFn: typeof fetch;

  constructor(
    fetchFn?: typeof fetch,
    private readonly base = "",
  ) {
    // Bind so a bare window.fetch does not lose its receiver.
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, init);
    if (!response.ok) {
      throw new ApiError(response.status, await describeError(response));
    }
    return (await response.json()) as T;
  }

  roles(): Promise<RolesDoc> {
    return this.request<RolesDoc>("/roles");
  }

  authorize(body: AuthorizeRequest): Promise<RankingDoc> {
    return this.request<RankingDoc>("/authorize", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  sweep(body: SweepRequest): Promise<SweepDoc> {
    return this.request<SweepDoc>("/sweep", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }
}
