/**
 * Browser pentagon game. Five clickable nodes arranged on a pentagon show
 * real chips (gold) and imaginary chips (violet); clicking a node fires the
 * active move there, clicking the center pentagon cycles the move kind.
 * Puzzle mode scrambles the zero board through the engine and is won when
 * every node is empty again. All algebra (puzzles, hints, canonical forms)
 * comes from the engine over the JSON protocol; the client only mirrors the
 * move table, and cross-checks even that against the engine as you play.
 *
 * The session (board, history, mode, seed) persists to localStorage, so a
 * refresh resumes the game.
 */

import { HttpEngineClient, EngineCallError } from "./engine.js";
import { certificateToHints, describeHint, NodeHint } from "./hint.js";
import { Chip, MOVE_CYCLE, MoveKind, NODES, ZERO_CONFIG, chipLabel } from "./moves.js";
import {
  GameState, applyMoveAt, cycleMoveKind, deserializeState, isWin, newFreePlay,
  newPuzzle, resetToInitial, serializeState, setMoveKind, undo,
} from "./state.js";
import { configFromWire } from "./protocol.js";

const STORAGE_KEY = "pentachip-session";
const SIZE = 520;
const CENTER = SIZE / 2;
const NODE_RADIUS = 46;
const RING_RADIUS = 190;
const CROSS_CHECK_EVERY = 8;

const MOVE_DESCRIPTIONS: Record<MoveKind, string> = {
  "A": "node +1+i, neighbors −i",
  "B": "node −1+i, neighbors +1",
  "-A": "node −1−i, neighbors +i",
  "-B": "node +1−i, neighbors −1",
};

function engineUrl(): string {
  const override = new URLSearchParams(window.location.search).get("engine");
  return override ?? "http://127.0.0.1:8642/rpc";
}

function nodeCenter(node: number): { x: number; y: number } {
  const angle = -Math.PI / 2 + (2 * Math.PI * node) / NODES;
  return {
    x: CENTER + RING_RADIUS * Math.cos(angle),
    y: CENTER + RING_RADIUS * Math.sin(angle),
  };
}

function pentagonPoints(radius: number): string {
  return Array.from({ length: NODES }, (_, k) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * k) / NODES;
    return `${CENTER + radius * Math.cos(angle)},${CENTER + radius * Math.sin(angle)}`;
  }).join(" ");
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement<K extends keyof SVGElementTagNameMap>(
    tag: K, attrs: Record<string, string>): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

class App {
  private state: GameState;
  private readonly engine = new HttpEngineClient(engineUrl());
  private hints: NodeHint[] | null = null;
  private movesSinceCrossCheck = 0;

  private readonly board: SVGSVGElement;
  private readonly statusLine: HTMLElement;
  private readonly errorBanner: HTMLElement;
  private readonly hintLine: HTMLElement;

  constructor(private readonly root: HTMLElement) {
    this.state = this.restoreSession() ?? newFreePlay();

    const title = document.createElement("h1");
    title.textContent = "Pentagon chip-firing";
    root.appendChild(title);

    this.errorBanner = document.createElement("div");
    this.errorBanner.className = "banner error hidden";
    root.appendChild(this.errorBanner);

    this.statusLine = document.createElement("div");
    this.statusLine.className = "banner status";
    root.appendChild(this.statusLine);

    this.board = svgElement("svg", {
      viewBox: `0 0 ${SIZE} ${SIZE}`, width: String(SIZE), height: String(SIZE),
    });
    root.appendChild(this.board);

    root.appendChild(this.buildControls());

    this.hintLine = document.createElement("div");
    this.hintLine.className = "hint-line";
    root.appendChild(this.hintLine);

    const help = document.createElement("p");
    help.className = "help";
    help.textContent =
      "Click a node to fire the active move there; click the center pentagon " +
      "to switch between A, B, −A and −B firings. In puzzle mode, " +
      "clear every node back to 0 chips.";
    root.appendChild(help);

    this.render();
  }

  // --- session ------------------------------------------------------------

  private restoreSession(): GameState | null {
    try {
      const stored = window.localStorage.getItem(STORAGE_KEY);
      return stored ? deserializeState(stored) : null;
    } catch {
      return null;
    }
  }

  private persistSession(): void {
    try {
      window.localStorage.setItem(STORAGE_KEY, serializeState(this.state));
    } catch {
      // storage may be unavailable; the game still works
    }
  }

  // --- engine interactions ------------------------------------------------

  private reportEngineError(context: string, error: unknown): void {
    const detail = error instanceof EngineCallError
      ? `${context}: ${error.code}: ${error.message}`
      : `${context}: engine unreachable (${String(error)})`;
    this.errorBanner.textContent = `${detail} — game continues locally`;
    this.errorBanner.classList.remove("hidden");
  }

  private clearEngineError(): void {
    this.errorBanner.classList.add("hidden");
  }

  private async startPuzzle(difficulty: number): Promise<void> {
    try {
      const result = await this.engine.puzzle(difficulty);
      this.update(newPuzzle(configFromWire(result.config), result.seed));
      this.clearEngineError();
    } catch (error) {
      this.reportEngineError("new puzzle", error);
    }
  }

  private async requestHint(): Promise<void> {
    try {
      let certificate: number[][];
      if (this.state.mode === "puzzle") {
        const result = await this.engine.equivalent(this.state.config, ZERO_CONFIG);
        if (!result.equivalent || !result.certificate) {
          this.reportEngineError("hint", new Error("board not solvable to zero"));
          return;
        }
        certificate = result.certificate;
      } else {
        // free play: aim for the canonical representative instead of zero
        certificate = (await this.engine.canonicalize(this.state.config)).certificate;
      }
      this.hints = certificateToHints(certificate);
      this.clearEngineError();
      this.render();
    } catch (error) {
      this.reportEngineError("hint", error);
    }
  }

  /** Occasionally confirm the local move table against the engine. */
  private crossValidate(previous: GameState): void {
    this.movesSinceCrossCheck += 1;
    if (this.movesSinceCrossCheck < CROSS_CHECK_EVERY) return;
    this.movesSinceCrossCheck = 0;
    const move = this.state.history[this.state.history.length - 1];
    if (!move) return;
    const expected = this.state.config;
    this.engine.apply(previous.config, move).then((result) => {
      const engineConfig = configFromWire(result.config);
      if (!engineConfig.every((chip, k) =>
          chip[0] === expected[k]![0] && chip[1] === expected[k]![1])) {
        this.reportEngineError("cross-check",
          new Error("local move table disagrees with engine"));
      }
    }).catch(() => {
      // unreachable engine is already reported by explicit actions
    });
  }

  // --- state changes ------------------------------------------------------

  private update(next: GameState): void {
    this.state = next;
    this.hints = null;
    this.persistSession();
    this.render();
  }

  private fireAt(node: number): void {
    const previous = this.state;
    this.update(applyMoveAt(previous, node));
    this.crossValidate(previous);
  }

  // --- rendering ----------------------------------------------------------

  private buildControls(): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "controls";

    const difficulty = document.createElement("select");
    difficulty.id = "difficulty";
    for (const level of [3, 5, 10, 20, 35, 50]) {
      const option = document.createElement("option");
      option.value = String(level);
      option.textContent = `difficulty ${level}`;
      if (level === 10) option.selected = true;
      difficulty.appendChild(option);
    }

    const button = (label: string, onClick: () => void): HTMLButtonElement => {
      const b = document.createElement("button");
      b.textContent = label;
      b.addEventListener("click", onClick);
      return b;
    };

    bar.appendChild(button("New puzzle", () => {
      void this.startPuzzle(Number(difficulty.value));
    }));
    bar.appendChild(difficulty);
    bar.appendChild(button("Free play", () => this.update(newFreePlay())));
    bar.appendChild(button("Undo", () => this.update(undo(this.state))));
    bar.appendChild(button("Restart", () => this.update(resetToInitial(this.state))));
    bar.appendChild(button("Hint", () => { void this.requestHint(); }));
    return bar;
  }

  private render(): void {
    this.board.replaceChildren();
    this.renderCenter();
    this.state.config.forEach((chip, node) => this.renderNode(node, chip));
    this.renderStatus();
    this.hintLine.textContent = this.hints ? `hint — ${describeHint(this.hints)}` : "";
  }

  private renderCenter(): void {
    const center = svgElement("polygon", {
      points: pentagonPoints(70),
      class: "center-pentagon",
    });
    center.addEventListener("click", () => this.update(cycleMoveKind(this.state)));
    this.board.appendChild(center);

    const kind = svgElement("text", {
      x: String(CENTER), y: String(CENTER - 2),
      class: "center-kind", "text-anchor": "middle",
    });
    kind.textContent = this.state.activeMove;
    this.board.appendChild(kind);

    const detail = svgElement("text", {
      x: String(CENTER), y: String(CENTER + 22),
      class: "center-detail", "text-anchor": "middle",
    });
    detail.textContent = MOVE_DESCRIPTIONS[this.state.activeMove];
    this.board.appendChild(detail);

    // switch kinds from the palette, too
    MOVE_CYCLE.forEach((kindName, index) => {
      const x = CENTER - 66 + 44 * index;
      const y = CENTER + 52;
      const pad = svgElement("rect", {
        x: String(x - 17), y: String(y - 14), width: "34", height: "22", rx: "5",
        class: kindName === this.state.activeMove ? "kind-pad active" : "kind-pad",
      });
      pad.addEventListener("click", () => this.update(setMoveKind(this.state, kindName)));
      this.board.appendChild(pad);
      const label = svgElement("text", {
        x: String(x), y: String(y + 2), class: "kind-pad-label", "text-anchor": "middle",
      });
      label.textContent = kindName;
      label.addEventListener("click", () => this.update(setMoveKind(this.state, kindName)));
      this.board.appendChild(label);
    });
  }

  private renderNode(node: number, chip: Chip): void {
    const { x, y } = nodeCenter(node);
    const group = svgElement("g", { class: "node" });
    group.addEventListener("click", () => this.fireAt(node));

    group.appendChild(svgElement("circle", {
      cx: String(x), cy: String(y), r: String(NODE_RADIUS),
      class: chip[0] === 0 && chip[1] === 0 ? "node-circle empty" : "node-circle",
    }));

    const index = svgElement("text", {
      x: String(x), y: String(y - NODE_RADIUS - 8),
      class: "node-index", "text-anchor": "middle",
    });
    index.textContent = String(node);
    group.appendChild(index);

    const real = svgElement("text", {
      x: String(x), y: String(y - 4), class: "chips real", "text-anchor": "middle",
    });
    real.textContent = `${chip[0]} re`;
    group.appendChild(real);

    const imag = svgElement("text", {
      x: String(x), y: String(y + 18), class: "chips imag", "text-anchor": "middle",
    });
    imag.textContent = `${chip[1]} im`;
    group.appendChild(imag);

    const hint = this.hints?.[node];
    if (hint && (hint.a !== 0 || hint.b !== 0)) {
      const hintText = svgElement("text", {
        x: String(x), y: String(y + NODE_RADIUS + 18),
        class: "node-hint", "text-anchor": "middle",
      });
      hintText.textContent = describeHint([hint]).replace("node 0: ", "");
      group.appendChild(hintText);
    }

    this.board.appendChild(group);
  }

  private renderStatus(): void {
    const chips = this.state.config.map((chip) => chipLabel(chip)).join("  ");
    if (isWin(this.state)) {
      this.statusLine.textContent =
        `★ solved in ${this.state.history.length} firings — board: ${chips}`;
      this.statusLine.classList.add("win");
    } else {
      const mode = this.state.mode === "puzzle"
        ? `puzzle${this.state.puzzleSeed !== undefined ? ` (seed ${this.state.puzzleSeed})` : ""}`
        : "free play";
      this.statusLine.textContent =
        `${mode} · ${this.state.history.length} firings · board: ${chips}`;
      this.statusLine.classList.remove("win");
    }
  }
}

export function mount(root: HTMLElement): void {
  new App(root);
}

const rootElement = document.getElementById("app");
if (rootElement) {
  mount(rootElement);
}
