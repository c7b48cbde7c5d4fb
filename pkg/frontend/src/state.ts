/**
 * Immutable game state and its reducers. The invariant that everything else
 * leans on: replaying `history` from `initialConfig` always reproduces
 * `config` exactly, so undo is exact and sessions can be persisted as
 * (initial, history) without drift.
 */

import {
  Config, FiringMove, MOVE_CYCLE, MoveKind, NODES, ZERO_CONFIG,
  applyMove, configsEqual, isZero,
} from "./moves.js";

export type GameMode = "freePlay" | "puzzle";

export interface GameState {
  readonly config: Config;
  readonly initialConfig: Config;
  readonly activeMove: MoveKind;
  readonly mode: GameMode;
  readonly history: readonly FiringMove[];
  readonly puzzleSeed?: number;
}

export function newFreePlay(config: Config = ZERO_CONFIG): GameState {
  return {
    config,
    initialConfig: config,
    activeMove: "A",
    mode: "freePlay",
    history: [],
  };
}

export function newPuzzle(config: Config, seed?: number): GameState {
  return {
    config,
    initialConfig: config,
    activeMove: "A",
    mode: "puzzle",
    history: [],
    ...(seed === undefined ? {} : { puzzleSeed: seed }),
  };
}

/** Fire an explicit move (hint playback); appends to history. */
export function applyFiring(state: GameState, move: FiringMove): GameState {
  return {
    ...state,
    config: applyMove(state.config, move),
    history: [...state.history, move],
  };
}

/** Fire the active move kind at a clicked node. */
export function applyMoveAt(state: GameState, node: number): GameState {
  return applyFiring(state, { kind: state.activeMove, node });
}

export function cycleMoveKind(state: GameState): GameState {
  const index = MOVE_CYCLE.indexOf(state.activeMove);
  return { ...state, activeMove: MOVE_CYCLE[(index + 1) % MOVE_CYCLE.length]! };
}

export function setMoveKind(state: GameState, kind: MoveKind): GameState {
  return { ...state, activeMove: kind };
}

export function undo(state: GameState): GameState {
  if (state.history.length === 0) return state;
  const history = state.history.slice(0, -1);
  return { ...state, history, config: replayConfig(state.initialConfig, history) };
}

export function resetToInitial(state: GameState): GameState {
  return { ...state, history: [], config: state.initialConfig };
}

export function replayConfig(initial: Config, history: readonly FiringMove[]): Config {
  let config = initial;
  for (const move of history) {
    config = applyMove(config, move);
  }
  return config;
}

/** True when the state upholds the replay invariant. */
export function stateConsistent(state: GameState): boolean {
  return configsEqual(replayConfig(state.initialConfig, state.history), state.config);
}

/** Puzzle is won exactly when every node is empty. */
export function isWin(state: GameState): boolean {
  return state.mode === "puzzle" && isZero(state.config);
}

// --- session persistence -------------------------------------------------

const KINDS = new Set<string>(MOVE_CYCLE);

function isChipPair(x: unknown): x is [number, number] {
  return Array.isArray(x) && x.length === 2 &&
    Number.isInteger(x[0]) && Number.isInteger(x[1]);
}

function parseConfigJson(x: unknown): Config | null {
  if (!Array.isArray(x) || x.length !== NODES || !x.every(isChipPair)) return null;
  return x.map((pair) => [pair[0], pair[1]] as const);
}

export function serializeState(state: GameState): string {
  return JSON.stringify({
    config: state.config,
    initialConfig: state.initialConfig,
    activeMove: state.activeMove,
    mode: state.mode,
    history: state.history,
    puzzleSeed: state.puzzleSeed ?? null,
  });
}

/** Parse a persisted session; null on anything malformed or inconsistent. */
export function deserializeState(text: string): GameState | null {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null) return null;
  const data = raw as Record<string, unknown>;
  const initialConfig = parseConfigJson(data.initialConfig);
  const config = parseConfigJson(data.config);
  if (!initialConfig || !config) return null;
  if (data.mode !== "freePlay" && data.mode !== "puzzle") return null;
  if (typeof data.activeMove !== "string" || !KINDS.has(data.activeMove)) return null;
  if (!Array.isArray(data.history)) return null;
  const history: FiringMove[] = [];
  for (const entry of data.history) {
    if (typeof entry !== "object" || entry === null) return null;
    const move = entry as Record<string, unknown>;
    if (typeof move.kind !== "string" || !KINDS.has(move.kind)) return null;
    if (!Number.isInteger(move.node) || (move.node as number) < 0 ||
        (move.node as number) >= NODES) return null;
    history.push({ kind: move.kind as MoveKind, node: move.node as number });
  }
  const state: GameState = {
    config,
    initialConfig,
    activeMove: data.activeMove as MoveKind,
    mode: data.mode,
    history,
    ...(Number.isInteger(data.puzzleSeed) ? { puzzleSeed: data.puzzleSeed as number } : {}),
  };
  // a tampered or stale session must not resurrect an impossible board
  return stateConsistent(state) ? state : null;
}
