// Board view model and game flow. Every legality, verdict and overlay
// datum shown to the user is copied from server responses; the only
// client-side computation is geometry (mapping a clicked lattice cell to
// the removal it denotes).

import { ApiError, GameClient } from "./api.js";
import type {
  AnalysisView,
  CreateGameRequest,
  MoveRef,
  SessionView,
} from "./types.js";

export type OverlayKind = "wythoffP" | "staticClass" | "none";

export interface CellView {
  x: number;
  y: number;
  staticCode: string; // server staticGrid character
  wythoffP: boolean; // server wythoffP membership
  isCurrent: boolean;
}

export interface BoardViewModel {
  session: SessionView;
  analysis: AnalysisView;
  overlay: OverlayKind;
  cells: CellView[][]; // indexed [y][x]
  forbidden: MoveRef[];
  legal: MoveRef[];
  recommended: MoveRef | null;
  pendingWindow: { target: number; lo: number; hi: number } | null;
  credits: { mover: number; other: number };
  history: SessionView["moves"];
  banner: string | null;
  violatedWindow: { target: number; lo: number; hi: number } | null;
}

export function buildViewModel(
  session: SessionView,
  analysis: AnalysisView,
  overlay: OverlayKind,
  banner: string | null = null,
  violatedWindow: BoardViewModel["violatedWindow"] = null,
): BoardViewModel {
  const extent = analysis.overlays.extent;
  const marked = new Set(analysis.overlays.wythoffP.map(([x, y]) => `${x},${y}`));
  const cells: CellView[][] = [];
  for (let y = 0; y <= extent.pile1; y++) {
    const row: CellView[] = [];
    const gridRow = analysis.overlays.staticGrid[y] ?? "";
    for (let x = 0; x <= extent.pile0; x++) {
      row.push({
        x,
        y,
        staticCode: gridRow.charAt(x),
        wythoffP: marked.has(`${x},${y}`),
        isCurrent: x === session.position.pile0 && y === session.position.pile1,
      });
    }
    cells.push(row);
  }
  return {
    session,
    analysis,
    overlay,
    cells,
    forbidden: analysis.forbiddenMoves,
    legal: analysis.legalMoves,
    recommended: analysis.recommendedMove,
    pendingWindow: analysis.pendingWindow,
    credits: { mover: analysis.creditMover, other: analysis.creditOther },
    history: session.moves,
    banner,
    violatedWindow,
  };
}

// A clicked cell denotes a removal only if exactly one coordinate
// decreases; anything else is not a move in this game.
export function cellToMove(
  position: { pile0: number; pile1: number },
  x: number,
  y: number,
): MoveRef | null {
  if (x === position.pile0 && y < position.pile1) {
    return { pile: 1, amount: position.pile1 - y };
  }
  if (y === position.pile1 && x < position.pile0) {
    return { pile: 0, amount: position.pile0 - x };
  }
  return null;
}

export class GameController {
  private session: SessionView | null = null;
  private analysis: AnalysisView | null = null;
  private overlay: OverlayKind = "staticClass";
  private banner: string | null = null;
  private violatedWindow: BoardViewModel["violatedWindow"] = null;

  constructor(private readonly client: GameClient) {}

  get view(): BoardViewModel {
    if (this.session === null || this.analysis === null) {
      throw new Error("no game in progress");
    }
    return buildViewModel(this.session, this.analysis, this.overlay, this.banner, this.violatedWindow);
  }

  async start(request: CreateGameRequest): Promise<BoardViewModel> {
    this.session = await this.client.createGame(request);
    this.analysis = await this.client.getAnalysis(this.session.id);
    this.banner = null;
    this.violatedWindow = null;
    return this.view;
  }

  async playTurn(move: MoveRef): Promise<BoardViewModel> {
    if (this.session === null) {
      throw new Error("no game in progress");
    }
    try {
      this.session = await this.client.postMove(this.session.id, move);
      this.banner = null;
      this.violatedWindow = null;
    } catch (error) {
      if (error instanceof ApiError) {
        // surface the rejection inline; the user keeps the turn
        this.banner = `${error.code}: ${error.message}`;
        this.violatedWindow =
          error.code === "imitation_budget_exhausted"
            ? this.analysis?.pendingWindow ?? null
            : null;
        return this.view;
      }
      throw error;
    }
    this.analysis = await this.client.getAnalysis(this.session.id);
    return this.view;
  }

  async playCell(x: number, y: number): Promise<BoardViewModel> {
    if (this.session === null) {
      throw new Error("no game in progress");
    }
    const move = cellToMove(this.session.position, x, y);
    if (move === null) {
      this.banner = "not a removal: pick a cell left of or below the marker";
      return this.view;
    }
    return this.playTurn(move);
  }

  toggleOverlay(kind: OverlayKind): BoardViewModel {
    this.overlay = kind;
    return this.view; // data unchanged; only the displayed layer switches
  }
}
