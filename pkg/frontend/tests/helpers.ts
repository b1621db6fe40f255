import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { RankingDoc, RolesDoc, SweepDoc } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export const rolesDoc = () => fixture<RolesDoc>("roles.json");
export const rankingAtS1 = () => fixture<RankingDoc>("authorize_s1.json");
export const rankingAtS2 = () => fixture<RankingDoc>("authorize_s2.json");
export const rankingExact = () => fixture<RankingDoc>("authorize_exact.json");
export const sweepDoc = () => fixture<SweepDoc>("sweep.json");

export function jsonResponse(status: number, body: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  } as unknown as Response;
}

export interface RecordedCall {
  url: string;
  method: string;
  body?: unknown;
}

export interface FixtureFetch {
  fetchFn: typeof fetch;
  calls: RecordedCall[];
}

/** Fetch stub that replays genuine service responses captured for the reference hierarchy. */
export function fixtureFetch(
  override?: (call: RecordedCall) => Response | Promise<Response> | undefined,
): FixtureFetch {
  const calls: RecordedCall[] = [];
  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const call: RecordedCall = { url, method };
    if (init?.body) call.body = JSON.parse(String(init.body));
    calls.push(call);

    const overridden = override?.(call);
    if (overridden) return overridden;

    if (url.endsWith("/roles") && method === "GET") {
      return jsonResponse(200, rolesDoc());
    }
    if (url.endsWith("/authorize") && method === "POST") {
      const body = call.body as { require: string[]; s: number };
      if (body.require.length === 4) return jsonResponse(200, rankingExact());
      if (Math.abs(body.s - 1) < 0.02) return jsonResponse(200, rankingAtS1());
      if (Math.abs(body.s - 2) < 0.02) return jsonResponse(200, rankingAtS2());
      throw new Error(`no authorize fixture for s=${body.s}`);
    }
    if (url.endsWith("/sweep") && method === "POST") {
      return jsonResponse(200, sweepDoc());
    }
    throw new Error(`unexpected request: ${method} ${url}`);
  }) as typeof fetch;
  return { fetchFn, calls };
}

export function topRole(root: HTMLElement): string | undefined {
  return root.querySelector<HTMLTableRowElement>("table.ranking tbody tr")?.dataset.role;
}

export function rowOrder(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLTableRowElement>("table.ranking tbody tr")].map(
    (row) => row.dataset.role ?? "",
  );
}
