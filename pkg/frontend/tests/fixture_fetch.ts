// Fake fetch backed by a recorded exchange list, consumed strictly in
// order: the client must issue exactly the recorded requests.

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import path from "node:path";

import type { FetchLike } from "../src/api.js";

export interface Exchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export function loadFixture(name: string): Exchange[] {
  const here = path.dirname(fileURLToPath(import.meta.url));
  return JSON.parse(readFileSync(path.join(here, "fixtures", name), "utf-8"));
}

export interface FixtureFetch {
  fetch: FetchLike;
  remaining(): number;
}

// key-order-independent serialisation for body comparison
function canonical(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(canonical).join(",")}]`;
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([k, v]) => `${JSON.stringify(k)}:${canonical(v)}`);
    return `{${entries.join(",")}}`;
  }
  return JSON.stringify(value);
}

export function fixtureFetch(exchanges: Exchange[]): FixtureFetch {
  let cursor = 0;
  const fetch: FetchLike = async (input, init) => {
    const expected = exchanges[cursor];
    if (expected === undefined) {
      throw new Error(`unexpected request beyond fixture: ${init?.method} ${input}`);
    }
    cursor += 1;
    const method = init?.method ?? "GET";
    if (method !== expected.method || input !== expected.path) {
      throw new Error(
        `request ${cursor} mismatch: got ${method} ${input}, ` +
          `fixture has ${expected.method} ${expected.path}`,
      );
    }
    const sentBody = init?.body === undefined ? null : JSON.parse(init.body);
    if (canonical(sentBody) !== canonical(expected.body)) {
      throw new Error(
        `body ${cursor} mismatch: got ${JSON.stringify(sentBody)}, ` +
          `fixture has ${JSON.stringify(expected.body)}`,
      );
    }
    return {
      status: expected.status,
      json: async () => structuredClone(expected.response),
    };
  };
  return { fetch, remaining: () => exchanges.length - cursor };
}
