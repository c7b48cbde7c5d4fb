/**
 * Engine clients: typed request helpers over two interchangeable transports.
 *
 * - LineEngineClient speaks newline-delimited JSON over any duplex pair of
 *   "write a line" / "lines arrive" callbacks (a spawned engine process in a
 *   desktop shell or test harness).
 * - HttpEngineClient POSTs each request to an engine started with
 *   `pentachip serve --http PORT` (the browser deployment).
 *
 * Responses are correlated by id; engine-reported failures reject with
 * EngineCallError carrying the protocol error code.
 */

import { Config, FiringMove } from "./moves.js";
import {
  ApplyResult, CanonicalizeResult, EngineResponse, EquivalentResult,
  MoveTableResult, PuzzleResult, configToWire, moveToWire, parseResponse,
} from "./protocol.js";

export class EngineCallError extends Error {
  constructor(readonly code: string, message: string) {
    super(message);
    this.name = "EngineCallError";
  }
}

export abstract class EngineClientBase {
  protected abstract request(op: string, params: Record<string, unknown>): Promise<unknown>;

  canonicalize(config: Config): Promise<CanonicalizeResult> {
    return this.request("canonicalize", { config: configToWire(config) }) as
      Promise<CanonicalizeResult>;
  }

  equivalent(a: Config, b: Config): Promise<EquivalentResult> {
    return this.request("equivalent", { a: configToWire(a), b: configToWire(b) }) as
      Promise<EquivalentResult>;
  }

  puzzle(difficulty: number, seed?: number): Promise<PuzzleResult> {
    const params: Record<string, unknown> = { difficulty };
    if (seed !== undefined) params.seed = seed;
    return this.request("puzzle", params) as Promise<PuzzleResult>;
  }

  apply(config: Config, move: FiringMove): Promise<ApplyResult> {
    return this.request("apply", { config: configToWire(config), move: moveToWire(move) }) as
      Promise<ApplyResult>;
  }

  moveTable(): Promise<MoveTableResult> {
    return this.request("move_table", {}) as Promise<MoveTableResult>;
  }

  rawRequest(op: string, params: Record<string, unknown>): Promise<unknown> {
    return this.request(op, params);
  }
}

function settle(response: EngineResponse,
                resolve: (value: unknown) => void,
                reject: (reason: Error) => void): void {
  if (response.ok) {
    resolve(response.result);
  } else {
    reject(new EngineCallError(response.error.code, response.error.message));
  }
}

export class LineEngineClient extends EngineClientBase {
  private nextId = 1;
  private pending = new Map<number, {
    resolve: (value: unknown) => void;
    reject: (reason: Error) => void;
  }>();

  constructor(private readonly writeLine: (line: string) => void) {
    super();
  }

  /** Feed one line received from the engine's stdout. */
  handleLine(line: string): void {
    if (!line.trim()) return;
    let response: EngineResponse;
    try {
      response = parseResponse(line);
    } catch {
      return; // not a response object; ignore stray output
    }
    const id = typeof response.id === "number" ? response.id : Number.NaN;
    const waiter = this.pending.get(id);
    if (!waiter) return;
    this.pending.delete(id);
    settle(response, waiter.resolve, waiter.reject);
  }

  /** Reject everything in flight (engine exited or stream broke). */
  fail(reason: Error): void {
    const waiters = [...this.pending.values()];
    this.pending.clear();
    for (const waiter of waiters) waiter.reject(reason);
  }

  protected request(op: string, params: Record<string, unknown>): Promise<unknown> {
    const id = this.nextId++;
    return new Promise((resolve, reject) => {
      this.pending.set(id, { resolve, reject });
      this.writeLine(JSON.stringify({ op, params, id }));
    });
  }
}

export class HttpEngineClient extends EngineClientBase {
  private nextId = 1;

  constructor(private readonly url: string) {
    super();
  }

  protected async request(op: string, params: Record<string, unknown>): Promise<unknown> {
    const id = this.nextId++;
    const httpResponse = await fetch(this.url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ op, params, id }),
    });
    const response = parseResponse(await httpResponse.text());
    return new Promise((resolve, reject) => settle(response, resolve, reject));
  }
}
