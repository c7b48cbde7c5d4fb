/**
 * Hints are engine certificates read as firing counts: the certificate entry
 * for node k is [a, b] where a is the net number of A firings and b the net
 * number of B firings needed there (negative = the inverse move).
 */

import { FiringMove, NODES } from "./moves.js";

export interface NodeHint {
  readonly a: number;
  readonly b: number;
}

export function certificateToHints(certificate: number[][]): NodeHint[] {
  if (certificate.length !== NODES) {
    throw new Error(`certificate must have ${NODES} entries`);
  }
  return certificate.map((pair) => ({ a: pair[0] ?? 0, b: pair[1] ?? 0 }));
}

/** Expand net counts into an explicit move sequence (node order, A before B). */
export function hintsToMoves(hints: readonly NodeHint[]): FiringMove[] {
  const moves: FiringMove[] = [];
  hints.forEach((hint, node) => {
    for (let k = 0; k < Math.abs(hint.a); k++) {
      moves.push({ kind: hint.a > 0 ? "A" : "-A", node });
    }
    for (let k = 0; k < Math.abs(hint.b); k++) {
      moves.push({ kind: hint.b > 0 ? "B" : "-B", node });
    }
  });
  return moves;
}

export function totalHintMoves(hints: readonly NodeHint[]): number {
  return hints.reduce((sum, hint) => sum + Math.abs(hint.a) + Math.abs(hint.b), 0);
}

export function describeHint(hints: readonly NodeHint[]): string {
  const parts: string[] = [];
  hints.forEach((hint, node) => {
    const bits: string[] = [];
    if (hint.a !== 0) bits.push(`${hint.a > 0 ? "A" : "-A"}×${Math.abs(hint.a)}`);
    if (hint.b !== 0) bits.push(`${hint.b > 0 ? "B" : "-B"}×${Math.abs(hint.b)}`);
    if (bits.length > 0) parts.push(`node ${node}: ${bits.join(" ")}`);
  });
  return parts.length > 0 ? parts.join("; ") : "already there";
}
