// Wire types for the game service. Field names mirror the server JSON
// exactly; the client renders these verbatim and computes no game logic.

export type Seat = "first" | "second";
export type EngineSide = "none" | Seat;

export interface MoveRef {
  pile: number;
  amount: number;
}

export interface MoveRecord extends MoveRef {
  player: Seat;
  imitation: boolean;
}

export interface PendingView {
  target: number;
  base: number;
}

export interface SessionView {
  id: string;
  p: number;
  m: number;
  engineSide: EngineSide;
  position: { pile0: number; pile1: number };
  pending: PendingView | null;
  creditMover: number;
  creditOther: number;
  status: "ongoing" | "finished";
  winner: Seat | null;
  toMove: Seat | null;
  moves: MoveRecord[];
}

export interface VerdictView {
  outcome: "P" | "N";
  clause: "I" | "II" | null;
  winningMove: MoveRef | null;
}

export interface StaticView {
  kind: "NonDynamicP" | "NonDynamicN" | "Dynamic";
  reason: string;
}

export interface PendingWindowView {
  target: number;
  lo: number;
  hi: number;
}

export interface OverlaysView {
  extent: { pile0: number; pile1: number };
  wythoffP: [number, number][];
  // staticGrid[y][x] is one of "P" | "D" | "a" | "b" | "n"
  staticGrid: string[];
}

export interface AnalysisView {
  position: { pile0: number; pile1: number };
  status: "ongoing" | "finished";
  creditMover: number;
  creditOther: number;
  verdict: VerdictView;
  static: StaticView;
  legalMoves: MoveRef[];
  forbiddenMoves: MoveRef[];
  recommendedMove: MoveRef | null;
  pendingWindow: PendingWindowView | null;
  overlays: OverlaysView;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export interface CreateGameRequest {
  p: number;
  m: number;
  a: number;
  b: number;
  engineSide?: EngineSide;
}
