/**
 * Types and guards for the engine's JSON protocol. The schema is the
 * contract; transports (stdio lines, HTTP POST /rpc) carry the same objects.
 */

import { Chip, Config, FiringMove, NODES } from "./moves.js";

export interface EngineRequest {
  op: string;
  params: Record<string, unknown>;
  id: number | string;
}

export interface EngineErrorPayload {
  code: string;
  message: string;
}

export type EngineResponse =
  | { id: number | string | null; ok: true; result: unknown }
  | { id: number | string | null; ok: false; error: EngineErrorPayload };

export interface CanonicalizeResult {
  canonical: number[];
  certificate: number[][];
}

export interface EquivalentResult {
  equivalent: boolean;
  certificate?: number[][];
}

export interface PuzzleResult {
  config: number[][];
  seed: number;
  difficulty: number;
  moves_applied: number;
  prng: string;
}

export interface ApplyResult {
  config: number[][];
}

export interface MoveTableEntry {
  kind: FiringMove["kind"];
  node: number;
  delta: number[][];
}

export interface MoveTableResult {
  moves: MoveTableEntry[];
}

export function configToWire(config: Config): number[][] {
  return config.map((chip) => [chip[0], chip[1]]);
}

export function configFromWire(data: number[][]): Config {
  if (data.length !== NODES) {
    throw new Error(`expected ${NODES} nodes on the wire, got ${data.length}`);
  }
  return data.map((pair): Chip => {
    if (pair.length !== 2 || !Number.isInteger(pair[0]) || !Number.isInteger(pair[1])) {
      throw new Error(`bad chip pair on the wire: ${JSON.stringify(pair)}`);
    }
    return [pair[0]!, pair[1]!];
  });
}

export function moveToWire(move: FiringMove): { kind: string; node: number } {
  return { kind: move.kind, node: move.node };
}

export function parseResponse(line: string): EngineResponse {
  const data = JSON.parse(line) as Record<string, unknown>;
  if (typeof data !== "object" || data === null || typeof data.ok !== "boolean") {
    throw new Error(`malformed engine response: ${line}`);
  }
  return data as unknown as EngineResponse;
}
