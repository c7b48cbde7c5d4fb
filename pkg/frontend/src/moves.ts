/**
 * The client-side move table: the one piece of engine math mirrored in the
 * browser, so every click gets instant feedback. It must stay byte-identical
 * to the engine's table; both test suites check against the committed
 * shared/move_vectors.json.
 *
 * A chip count is a Gaussian integer [re, im]. The A firing at node k adds
 * 1+i to the node and -i to each pentagon neighbor ((k±1) mod 5); B is i
 * times A, and the "-" moves are negations.
 */

export type MoveKind = "A" | "B" | "-A" | "-B";

export type Chip = readonly [number, number];
export type Config = readonly Chip[];

export interface FiringMove {
  readonly kind: MoveKind;
  readonly node: number;
}

export const NODES = 5;

export const MOVE_CYCLE: readonly MoveKind[] = ["A", "B", "-A", "-B"];

export const ZERO_CONFIG: Config = Object.freeze(
  Array.from({ length: NODES }, () => [0, 0] as Chip));

export function neighbors(node: number): [number, number] {
  return [(node + NODES - 1) % NODES, (node + 1) % NODES];
}

const KIND_UNIT: Record<MoveKind, Chip> = {
  "A": [1, 0],
  "B": [0, 1],
  "-A": [-1, 0],
  "-B": [0, -1],
};

function mul(a: Chip, b: Chip): Chip {
  return [a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]];
}

function add(a: Chip, b: Chip): Chip {
  return [a[0] + b[0], a[1] + b[1]];
}

export function moveDelta(move: FiringMove): Config {
  if (!Number.isInteger(move.node) || move.node < 0 || move.node >= NODES) {
    throw new RangeError(`node must be in 0..${NODES - 1}, got ${move.node}`);
  }
  const unit = KIND_UNIT[move.kind];
  const delta: Chip[] = Array.from({ length: NODES }, () => [0, 0] as Chip);
  delta[move.node] = mul(unit, [1, 1]);
  for (const nb of neighbors(move.node)) {
    delta[nb] = mul(unit, [0, -1]);
  }
  return delta;
}

export const ALL_MOVES: readonly FiringMove[] = MOVE_CYCLE.flatMap(
  (kind) => Array.from({ length: NODES }, (_, node) => ({ kind, node })));

export function applyMove(config: Config, move: FiringMove): Config {
  const delta = moveDelta(move);
  return config.map((chip, k) => add(chip, delta[k]!));
}

export function invertMove(move: FiringMove): FiringMove {
  const inverse: Record<MoveKind, MoveKind> = {
    "A": "-A", "-A": "A", "B": "-B", "-B": "B",
  };
  return { kind: inverse[move.kind], node: move.node };
}

export function configsEqual(a: Config, b: Config): boolean {
  return a.length === b.length &&
    a.every((chip, k) => chip[0] === b[k]![0] && chip[1] === b[k]![1]);
}

export function isZero(config: Config): boolean {
  return config.every((chip) => chip[0] === 0 && chip[1] === 0);
}

export function totalChips(config: Config): number {
  return config.reduce((sum, chip) => sum + chip[0] + chip[1], 0);
}

export function chipLabel(chip: Chip): string {
  const [re, im] = chip;
  if (im === 0) return String(re);
  const imPart = im === 1 ? "i" : im === -1 ? "-i" : `${im}i`;
  if (re === 0) return imPart;
  return im < 0 ? `${re}${imPart}` : `${re}+${imPart}`;
}
