/** Request plumbing for one panel: at most one request in flight, newer
 * requests abort older ones, and any response that is not the latest issued
 * request is discarded by id. */

import { ApiErrorBody } from "./types";

export interface PanelSuccess<Doc> {
  ok: true;
  value: Doc;
  requestId: number;
}

export interface PanelFailure {
  ok: false;
  code: string;
  detail: string;
  requestId: number;
}

export type PanelResult<Doc> = PanelSuccess<Doc> | PanelFailure;

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class PanelClient<Request, Doc> {
  private nextId = 0;

  constructor(
    private readonly url: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private controller: AbortController | null = null;

  /** Id the most recent call was assigned; responses with older ids are stale. */
  get latestId(): number {
    return this.nextId;
  }

  /** POST the body; resolves null when a newer request superseded this one. */
  async request(body: Request): Promise<PanelResult<Doc> | null> {
    const id = ++this.nextId;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    let response: Response;
    try {
      response = await this.fetchFn(this.url, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (error) {
      if (id !== this.nextId) {
        return null; // aborted or failed, but already superseded: stale
      }
      const detail = error instanceof Error ? error.message : String(error);
      return { ok: false, code: "network", detail: `service unreachable: ${detail}`, requestId: id };
    }
    if (id !== this.nextId) {
      return null; // a newer request was issued while this one was in flight
    }
    if (!response.ok) {
      let code = `http_${response.status}`;
      let detail = response.statusText || `request failed (${response.status})`;
      try {
        const parsed = (await response.json()) as ApiErrorBody;
        if (parsed?.error?.code) {
          code = parsed.error.code;
          detail = parsed.error.detail ?? code;
          if (parsed.error.estimated_count !== undefined) {
            detail += ` (estimated ${parsed.error.estimated_count} points; try a smaller n)`;
          }
        }
      } catch {
        // non-JSON error body: keep the HTTP status text
      }
      return { ok: false, code, detail, requestId: id };
    }
    const value = (await response.json()) as Doc;
    if (id !== this.nextId) {
      return null; // superseded while the body was streaming in
    }
    return { ok: true, value, requestId: id };
  }
}

/** Trailing-edge debounce; bursts of state changes yield exactly one call. */
export function debounce<Args extends unknown[]>(
  fn: (...args: Args) => void,
  delayMs: number,
): { (...args: Args): void; cancel(): void } {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: Args) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, delayMs);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped;
}
